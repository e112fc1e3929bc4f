#include "sdpmds/verify.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <thread>

#include "sdpmds/error.hpp"

namespace sdpmds {
namespace {

// Visits all k-subsets of 0..n-1 in lexicographic order.
void for_each_combination(unsigned n, unsigned k,
                          const std::function<void(const std::vector<unsigned>&)>& fn) {
    if (k > n) return;
    std::vector<unsigned> idx(k);
    for (unsigned i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        // Advance the rightmost index that still has room.
        unsigned i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (unsigned j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Cartesian product over per-row column choices: sizes[row] options per
// row, visited with row 0 as the most significant digit.
void for_each_choice(const std::vector<std::vector<std::vector<unsigned>>>& options,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> pick(options.size(), 0);
    while (true) {
        fn(pick);
        std::size_t row = options.size();
        while (row > 0) {
            --row;
            if (++pick[row] < options[row].size()) break;
            pick[row] = 0;
            if (row == 0) return;
        }
    }
}

std::vector<std::vector<unsigned>> combinations(unsigned n, unsigned k) {
    std::vector<std::vector<unsigned>> out;
    for_each_combination(n, k, [&](const std::vector<unsigned>& c) { out.push_back(c); });
    return out;
}

// Runs check(i) for i in 0..count-1 across workers; returns the least
// failing index. Chunks are contiguous so the minimum over chunk-local
// first failures is the global first failure.
std::optional<std::size_t> first_failure(std::size_t count, unsigned jobs,
                                         const std::function<bool(std::size_t)>& check) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    if (jobs <= 1 || count < 128) {
        for (std::size_t i = 0; i < count; ++i)
            if (!check(i)) return i;
        return std::nullopt;
    }
    std::size_t chunk = (count + jobs - 1) / jobs;
    std::vector<std::future<std::optional<std::size_t>>> futures;
    for (std::size_t begin = 0; begin < count; begin += chunk) {
        std::size_t end = std::min(begin + chunk, count);
        futures.push_back(std::async(std::launch::async, [begin, end, &check] {
            for (std::size_t i = begin; i < end; ++i)
                if (!check(i)) return std::optional<std::size_t>(i);
            return std::optional<std::size_t>();
        }));
    }
    std::optional<std::size_t> best;
    for (auto& f : futures) {
        std::optional<std::size_t> r = f.get();
        if (r && (!best || *r < *best)) best = r;
    }
    return best;
}

} // namespace

std::string property_name(Property p) {
    switch (p) {
        case Property::kSD: return "SD";
        case Property::kPMDS: return "PMDS";
        case Property::kLemma: return "LEMMA";
    }
    return "?";
}

std::string VerificationReport::describe() const {
    std::ostringstream os;
    os << property_name(property) << ": " << (pass ? "PASS" : "FAIL") << ", "
       << patterns_checked << (property == Property::kLemma ? " tuples" : " patterns");
    if (counterexample) os << ", counterexample: " << counterexample->to_string();
    if (lemma_counterexample)
        os << ", counterexample: " << lemma_counterexample->describe();
    return os.str();
}

std::uint64_t binom(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t acc = 1;
    for (unsigned i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
    return acc;
}

std::uint64_t sd_pattern_count(const CodeParams& params) {
    std::uint64_t free_cells = std::uint64_t{params.r} * (params.n - params.m);
    return binom(params.n, params.m) *
           (free_cells * (free_cells - 1) / 2);
}

std::uint64_t pmds_pattern_count(const CodeParams& params) {
    unsigned r = params.r, n = params.n, m = params.m;
    std::uint64_t per_row = binom(n, m);
    std::uint64_t one_row = 0, two_rows = 0;
    {
        std::uint64_t rest = 1;
        for (unsigned j = 0; j + 1 < r; ++j) rest *= per_row;
        one_row = std::uint64_t{r} * binom(n, m + 2) * rest;
    }
    if (r >= 2) {
        std::uint64_t rest = 1;
        for (unsigned j = 0; j + 2 < r; ++j) rest *= per_row;
        two_rows = binom(r, 2) * binom(n, m + 1) * binom(n, m + 1) * rest;
    }
    return one_row + two_rows;
}

void enumerate_sd_patterns(const CodeParams& params,
                           const std::function<void(const ErasurePattern&)>& fn) {
    unsigned r = params.r, n = params.n, m = params.m;
    for_each_combination(n, m, [&](const std::vector<unsigned>& cols) {
        // Cells outside the chosen columns, row-major.
        std::vector<Cell> free_cells;
        for (unsigned row = 0; row < r; ++row)
            for (unsigned col = 0; col < n; ++col)
                if (!std::binary_search(cols.begin(), cols.end(), col))
                    free_cells.push_back(Cell{row, col});
        for (std::size_t a = 0; a < free_cells.size(); ++a)
            for (std::size_t b = a + 1; b < free_cells.size(); ++b) {
                ErasurePattern p = ErasurePattern::full_columns(cols, r, n);
                p.insert(free_cells[a]);
                p.insert(free_cells[b]);
                fn(p);
            }
    });
}

void enumerate_pmds_patterns(const CodeParams& params,
                             const std::function<void(const ErasurePattern&)>& fn) {
    unsigned r = params.r, n = params.n, m = params.m;
    std::vector<std::vector<unsigned>> base = combinations(n, m);
    std::vector<std::vector<unsigned>> plus1 = combinations(n, m + 1);
    std::vector<std::vector<unsigned>> plus2 = combinations(n, m + 2);

    auto emit = [&](const std::vector<std::vector<std::vector<unsigned>>>& options,
                    const std::vector<std::size_t>& pick) {
        ErasurePattern p;
        for (unsigned row = 0; row < r; ++row)
            for (unsigned col : options[row][pick[row]]) p.insert(Cell{row, col});
        fn(p);
    };

    // One row carries both extras.
    for (unsigned q = 0; q < r; ++q) {
        std::vector<std::vector<std::vector<unsigned>>> options(r, base);
        options[q] = plus2;
        for_each_choice(options,
                        [&](const std::vector<std::size_t>& pick) { emit(options, pick); });
    }
    // Two distinct rows carry one extra each.
    for (unsigned q1 = 0; q1 + 1 < r; ++q1)
        for (unsigned q2 = q1 + 1; q2 < r; ++q2) {
            std::vector<std::vector<std::vector<unsigned>>> options(r, base);
            options[q1] = plus1;
            options[q2] = plus1;
            for_each_choice(options, [&](const std::vector<std::size_t>& pick) {
                emit(options, pick);
            });
        }
}

VerificationReport verify(const CodeParams& params, Property property, unsigned jobs) {
    if (property == Property::kLemma)
        throw Error("verify: use check_lemma for the determinant identity sweep");
    validate(params);
    ParityCheckMatrix pcm = build_parity_check(params);

    std::vector<ErasurePattern> patterns;
    std::uint64_t expected;
    if (property == Property::kSD) {
        expected = sd_pattern_count(params);
        patterns.reserve(expected);
        enumerate_sd_patterns(params, [&](const ErasurePattern& p) { patterns.push_back(p); });
    } else {
        expected = pmds_pattern_count(params);
        patterns.reserve(expected);
        enumerate_pmds_patterns(params,
                                [&](const ErasurePattern& p) { patterns.push_back(p); });
    }
    if (patterns.size() != expected)
        throw Error("verify: enumerated " + std::to_string(patterns.size()) +
                    " patterns but the closed form says " + std::to_string(expected));

    std::optional<std::size_t> bad =
        first_failure(patterns.size(), jobs,
                      [&](std::size_t i) { return pattern_decodable(pcm, patterns[i]); });

    VerificationReport report;
    report.property = property;
    report.patterns_checked = patterns.size();
    report.pass = !bad.has_value();
    if (bad) report.counterexample = patterns[*bad];
    return report;
}

VerificationReport check_lemma(unsigned m, unsigned n, unsigned r,
                               std::shared_ptr<const Algebra> alg, unsigned jobs) {
    if (m < 1 || n < 3 || m > n - 2)
        throw Error("check_lemma: need 1 <= m <= n-2");
    if (r < 2) throw Error("check_lemma: need r >= 2 for a nonzero row gap");

    std::vector<std::vector<unsigned>> lists = combinations(n, m + 1);
    std::vector<LemmaInputs> tuples;
    tuples.reserve(lists.size() * lists.size() * (r - 1));
    for (const auto& i_list : lists)
        for (const auto& j_list : lists)
            for (unsigned ell = 1; ell < r; ++ell)
                tuples.push_back(LemmaInputs{i_list, j_list, ell, n, r});

    std::optional<std::size_t> bad =
        first_failure(tuples.size(), jobs, [&](std::size_t t) {
            return delta_closed_form(*alg, tuples[t]) ==
                   build_lemma_matrix(alg, tuples[t]).determinant();
        });

    VerificationReport report;
    report.property = Property::kLemma;
    report.patterns_checked = tuples.size();
    report.pass = !bad.has_value();
    if (bad) report.lemma_counterexample = tuples[*bad];
    return report;
}

std::string ScenarioReport::describe() const {
    std::ostringstream os;
    for (const ScenarioCheck& s : scenarios) {
        os << s.name << " [" << s.pattern.to_string() << "]: sd="
           << (s.sd_decoded ? "decoded" : "undecodable")
           << (s.require_sd ? " (required)" : " (reported)") << ", pmds="
           << (s.pmds_decoded ? "decoded" : "undecodable")
           << (s.require_pmds ? " (required)" : " (reported)") << " -> "
           << (s.pass ? "ok" : "FAIL") << '\n';
    }
    os << (pass ? "PASS" : "FAIL") << ' ' << scenarios.size() << " scenarios";
    return os.str();
}

ScenarioReport run_failure_scenarios(const CodeParams& sd_params,
                                     const CodeParams& pmds_params,
                                     std::uint64_t seed) {
    auto check_shape = [](const CodeParams& p, Variant v, const char* which) {
        if (p.variant != v || p.r != 4 || p.n != 5 || p.m != 1)
            throw Error(std::string("scenarios: ") + which +
                        " parameters must be a r=4, n=5, m=1 " +
                        (v == Variant::kSD ? "SD" : "PMDS") + " code");
    };
    check_shape(sd_params, Variant::kSD, "first");
    check_shape(pmds_params, Variant::kPMDS, "second");

    Codec sd_codec(sd_params);
    Codec pmds_codec(pmds_params);

    const ErasurePattern one_per_row = ErasurePattern::parse("0:1 1:3 2:0 3:4");
    ErasurePattern col_plus_split = ErasurePattern::full_columns({2}, 4, 5);
    col_plus_split.insert(Cell{0, 4});
    col_plus_split.insert(Cell{2, 0});
    ErasurePattern col_plus_pair = ErasurePattern::full_columns({2}, 4, 5);
    col_plus_pair.insert(Cell{1, 0});
    col_plus_pair.insert(Cell{1, 4});

    ScenarioReport report;
    report.scenarios = {
        {"one erasure per row", one_per_row, true, true, false, false, false},
        {"full column plus sectors in two rows", col_plus_split, true, true, false,
         false, false},
        {"full column plus two sectors in one row", col_plus_pair, true, true, false,
         false, false},
        {"one per row plus two extras in one row",
         ErasurePattern::parse("0:1 1:3 2:0 2:2 2:4 3:4"), false, true, false, false,
         false},
        {"one per row plus extras in two rows",
         ErasurePattern::parse("0:1 1:0 1:3 2:0 3:1 3:4"), false, true, false, false,
         false},
    };

    std::mt19937_64 rng(seed);
    auto decodes = [&](const Codec& codec, const ErasurePattern& pattern) {
        StripeArray original = codec.encode(random_data_symbols(codec.params(), rng));
        StripeArray damaged = original;
        for (Cell c : pattern) damaged.set(c.row, c.col, 0);
        DecodeResult res = codec.decode(damaged, pattern);
        const StripeArray* repaired = std::get_if<StripeArray>(&res);
        return repaired != nullptr && *repaired == original;
    };

    report.pass = true;
    for (ScenarioCheck& s : report.scenarios) {
        s.sd_decoded = decodes(sd_codec, s.pattern);
        s.pmds_decoded = decodes(pmds_codec, s.pattern);
        s.pass = (!s.require_sd || s.sd_decoded) && (!s.require_pmds || s.pmds_decoded);
        report.pass = report.pass && s.pass;
    }
    return report;
}

} // namespace sdpmds
