// Acceptance gate: one timed pass/fail line per criterion, nonzero exit
// if any fails. Budgets are hard limits where the criterion pins one.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sdpmds/codec.hpp"
#include "sdpmds/error.hpp"
#include "sdpmds/verify.hpp"

using namespace sdpmds;

namespace {

int g_failures = 0;

void run_criterion(int id, const std::string& label, std::optional<double> budget,
                   const std::function<bool(std::string&)>& body) {
    std::string note;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                      .count();
    if (ok && budget && secs >= *budget) {
        ok = false;
        note = "over budget of " + std::to_string(*budget) + " s";
    }
    if (!ok) ++g_failures;
    std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << " ("
              << std::fixed << std::setprecision(2) << secs << " s) — " << label;
    if (!note.empty()) std::cout << " [" << note << "]";
    std::cout << std::endl;
}

CodeParams make(Variant v, unsigned r, unsigned n, unsigned m,
                std::shared_ptr<const Algebra> alg) {
    CodeParams p;
    p.variant = v;
    p.r = r;
    p.n = n;
    p.m = m;
    p.alg = std::move(alg);
    return p;
}

bool check_matrix(const Matrix& got, unsigned rows, unsigned cols,
                  const std::function<std::uint64_t(unsigned, unsigned)>& want,
                  std::string& note) {
    if (got.rows() != rows || got.cols() != cols) {
        note = "wrong shape";
        return false;
    }
    for (unsigned k = 0; k < rows; ++k)
        for (unsigned c = 0; c < cols; ++c)
            if (got.at(k, c) != want(k, c)) {
                std::ostringstream os;
                os << "mismatch at (" << k << "," << c << ")";
                note = os.str();
                return false;
            }
    return true;
}

std::vector<ErasurePattern> materialize(const CodeParams& p, Property prop) {
    std::vector<ErasurePattern> out;
    auto push = [&](const ErasurePattern& e) { out.push_back(e); };
    if (prop == Property::kSD)
        enumerate_sd_patterns(p, push);
    else
        enumerate_pmds_patterns(p, push);
    return out;
}

} // namespace

int main() {
    auto gf16 = make_field_algebra(4);
    auto gf32 = make_field_algebra(5);

    // ---- criterion 1: golden parity-check matrices -----------------------
    run_criterion(1, "golden parity-check matrices match the reference examples", 1.0,
                  [&](std::string& note) {
        // C(3,5,1,2) over GF(16), alpha = 2 mod x^4+x+1.
        const std::uint64_t g2_16[15] = {1,   9,   0xd, 0xf, 0xe, 7, 0xa, 5,
                                         0xb, 0xc, 6,   3,   8,   4, 2};
        const std::uint64_t vand16[5] = {1, 2, 4, 8, 3};
        ParityCheckMatrix sd1 = build_parity_check(make(Variant::kSD, 3, 5, 1, gf16));
        bool ok = check_matrix(sd1.matrix, 5, 15, [&](unsigned k, unsigned c) {
            unsigned j = c / 5, i = c % 5;
            if (k < 3) return std::uint64_t{k == j ? 1u : 0u};
            if (k == 3) return vand16[i];
            return g2_16[c];
        }, note);
        if (!ok) { note = "SD m=1 " + note; return false; }

        // C(3,5,2,2) over GF(16).
        const std::uint64_t g1_m2[5] = {1, 4, 3, 0xc, 5};
        ParityCheckMatrix sd2 = build_parity_check(make(Variant::kSD, 3, 5, 2, gf16));
        ok = check_matrix(sd2.matrix, 8, 15, [&](unsigned k, unsigned c) {
            unsigned j = c / 5, i = c % 5;
            if (k < 6) {
                if (k / 2 != j) return std::uint64_t{0};
                return k % 2 == 0 ? std::uint64_t{1} : vand16[i];
            }
            if (k == 6) return g1_m2[i];
            return g2_16[c];
        }, note);
        if (!ok) { note = "SD m=2 " + note; return false; }

        // C'(3,5,1,2) over GF(32), alpha = 2 mod x^5+x^2+1, stride N=7.
        const std::uint64_t vand32[5] = {1, 2, 4, 8, 0x10};
        const std::uint64_t g2_32[15] = {1,    0x12, 0x09, 0x16, 0x0b,
                                         0x1e, 0x0f, 0x15, 0x18, 0x0c,
                                         0x13, 0x1b, 0x1f, 0x1d, 0x1c};
        ParityCheckMatrix pm = build_parity_check(make(Variant::kPMDS, 3, 5, 1, gf32));
        ok = check_matrix(pm.matrix, 5, 15, [&](unsigned k, unsigned c) {
            unsigned j = c / 5, i = c % 5;
            if (k < 3) return std::uint64_t{k == j ? 1u : 0u};
            if (k == 3) return vand32[i];
            return g2_32[c];
        }, note);
        if (!ok) note = "PMDS " + note;
        return ok;
    });

    // ---- criterion 2: closed form == determinant, 3024 tuples ------------
    run_criterion(2, "cross-row determinant identity over 3024 tuples", 10.0,
                  [&](std::string& note) {
        std::vector<std::shared_ptr<const Algebra>> algebras = {
            gf16, gf32, make_ring_algebra(17), make_ring_algebra(23)};
        std::uint64_t total = 0;
        for (const auto& alg : algebras)
            for (unsigned m : {1u, 2u})
                for (unsigned n : {4u, 5u})
                    for (unsigned r : {2u, 3u}) {
                        if (m > n - 2) continue;
                        VerificationReport rep = check_lemma(m, n, r, alg, 0);
                        total += rep.patterns_checked;
                        if (!rep.pass) {
                            note = alg->describe() + " m=" + std::to_string(m) + " " +
                                   rep.describe();
                            return false;
                        }
                    }
        if (total != 3024) {
            note = "expected 3024 tuples, swept " + std::to_string(total);
            return false;
        }
        note = "3024 tuples";
        return true;
    });

    // ---- criteria 3-4: exhaustive property verification ------------------
    struct VerifyCase {
        CodeParams params;
        Property property;
        std::uint64_t expect;
    };
    std::vector<VerifyCase> sd_cases = {
        {make(Variant::kSD, 3, 5, 1, gf16), Property::kSD, 330},
        {make(Variant::kSD, 3, 5, 2, gf16), Property::kSD, 360},
        {make(Variant::kSD, 3, 5, 1, make_ring_algebra(17)), Property::kSD, 330},
    };
    VerifyCase pmds_case = {make(Variant::kPMDS, 3, 5, 1, gf32), Property::kPMDS, 2250};

    run_criterion(3, "SD verification: 330 + 360 + 330 patterns, all decodable", 10.0,
                  [&](std::string& note) {
        std::uint64_t total = 0;
        for (const VerifyCase& vc : sd_cases) {
            VerificationReport rep = verify(vc.params, vc.property, 0);
            total += rep.patterns_checked;
            if (!rep.pass || rep.patterns_checked != vc.expect) {
                note = vc.params.describe() + " -> " + rep.describe();
                return false;
            }
        }
        note = std::to_string(total) + " patterns";
        return true;
    });

    run_criterion(4, "PMDS verification: 2250 patterns, all decodable", 10.0,
                  [&](std::string& note) {
        VerificationReport rep = verify(pmds_case.params, pmds_case.property, 0);
        if (!rep.pass || rep.patterns_checked != pmds_case.expect) {
            note = rep.describe();
            return false;
        }
        note = "2250 patterns";
        return true;
    });

    // ---- criterion 5: decode verdict == rank verdict, exact recovery -----
    run_criterion(5, "decoder agrees with the rank check on every pattern",
                  std::nullopt, [&](std::string& note) {
        std::vector<VerifyCase> cases = sd_cases;
        cases.push_back(pmds_case);
        std::uint64_t checked = 0;
        for (std::size_t ci = 0; ci < cases.size(); ++ci) {
            const VerifyCase& vc = cases[ci];
            Codec codec(vc.params);
            std::mt19937_64 rng(1000 + ci);
            StripeArray original = codec.encode(random_data_symbols(vc.params, rng));
            for (const ErasurePattern& pattern : materialize(vc.params, vc.property)) {
                bool rank_ok = pattern_decodable(codec.parity_check(), pattern);
                StripeArray damaged = original;
                for (const Cell& c : pattern) damaged.set(c.row, c.col, 0);
                DecodeResult res = codec.decode(damaged, pattern);
                bool decoded = std::holds_alternative<StripeArray>(res);
                if (decoded != rank_ok) {
                    note = "verdict mismatch on " + pattern.to_string() + " for " +
                           vc.params.describe();
                    return false;
                }
                if (decoded && !(std::get<StripeArray>(res) == original)) {
                    note = "wrong recovery on " + pattern.to_string() + " for " +
                           vc.params.describe();
                    return false;
                }
                ++checked;
            }
        }
        note = std::to_string(checked) + " patterns";
        return true;
    });

    // ---- criterion 6: 1000 seeded round trips per SD code ----------------
    run_criterion(6, "1000 random round trips per code, uniform patterns", 30.0,
                  [&](std::string& note) {
        for (std::size_t ci = 0; ci < sd_cases.size(); ++ci) {
            const VerifyCase& vc = sd_cases[ci];
            Codec codec(vc.params);
            std::vector<ErasurePattern> family = materialize(vc.params, vc.property);
            std::mt19937_64 rng(2000 + ci);
            std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
            for (int trip = 0; trip < 1000; ++trip) {
                StripeArray original =
                    codec.encode(random_data_symbols(vc.params, rng));
                const ErasurePattern& pattern = family[pick(rng)];
                StripeArray damaged = original;
                for (const Cell& c : pattern) damaged.set(c.row, c.col, 0);
                DecodeResult res = codec.decode(damaged, pattern);
                if (!std::holds_alternative<StripeArray>(res) ||
                    !(std::get<StripeArray>(res) == original)) {
                    note = "round trip " + std::to_string(trip) + " failed on " +
                           pattern.to_string() + " for " + vc.params.describe();
                    return false;
                }
            }
        }
        note = "3000 round trips";
        return true;
    });

    // ---- criterion 7: the five-failure battery ---------------------------
    run_criterion(7, "failure battery: 1-3 decode under SD, all five under PMDS", 1.0,
                  [&](std::string& note) {
        ScenarioReport rep = run_failure_scenarios(
            make(Variant::kSD, 4, 5, 1, gf32), make(Variant::kPMDS, 4, 5, 1, gf32), 0);
        if (rep.scenarios.size() != 5 || !rep.pass) {
            note = rep.describe();
            return false;
        }
        std::string verdicts = "SD verdicts on 4-5: ";
        for (std::size_t i = 3; i < 5; ++i)
            verdicts += std::string(i == 3 ? "" : ", ") +
                        (rep.scenarios[i].sd_decoded ? "decoded" : "undecodable");
        note = verdicts;
        return true;
    });

    // ---- criterion 8: ring arithmetic identities --------------------------
    run_criterion(8, "ring identities: alpha^p, the all-ones relation, binomial units",
                  1.0, [&](std::string& note) {
        for (unsigned p : {5u, 7u, 17u}) {
            auto ring = make_ring_algebra(p);
            if (ring->alpha_pow(p) != 1) {
                note = "alpha^p != 1 for p=" + std::to_string(p);
                return false;
            }
            std::uint64_t geometric = 0;
            for (unsigned k = 0; k + 1 < p; ++k)
                geometric = ring->add(geometric, ring->alpha_pow(k));
            if (ring->alpha_pow(p - 1) != geometric ||
                geometric != (std::uint64_t{1} << (p - 1)) - 1) {
                note = "alpha^(p-1) != 1+alpha+...+alpha^(p-2) for p=" +
                       std::to_string(p);
                return false;
            }
            for (unsigned a = 0; a < p; ++a)
                for (unsigned b = a + 1; b < p; ++b)
                    if (!ring->is_unit(ring->add(ring->alpha_pow(a),
                                                 ring->alpha_pow(b)))) {
                        note = "alpha^" + std::to_string(a) + " + alpha^" +
                               std::to_string(b) + " not a unit for p=" +
                               std::to_string(p);
                        return false;
                    }
        }
        return true;
    });

    std::cout << "acceptance: " << (8 - g_failures) << "/8 criteria passed"
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
