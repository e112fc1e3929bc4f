#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdpmds/code.hpp"
#include "sdpmds/codec.hpp"
#include "sdpmds/error.hpp"
#include "sdpmds/hex.hpp"
#include "sdpmds/io.hpp"
#include "sdpmds/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1; // undecodable / verification FAIL
constexpr int kExitUsage = 2;

sdpmds::CodeParams load_params(const std::string& config_path) {
    std::vector<std::string> warnings;
    sdpmds::CodeParams params =
        sdpmds::make_code_params(sdpmds::load_code_config(config_path), &warnings);
    for (const std::string& w : warnings) std::cout << "# warning: " << w << '\n';
    return params;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        sdpmds::write_text_file(out_path, text);
}

int cmd_field_info(unsigned w, const std::string& modulus_hex, unsigned p) {
    std::shared_ptr<const sdpmds::Algebra> alg;
    if (p != 0) {
        alg = sdpmds::make_ring_algebra(p);
        std::cout << "kind=ring\np=" << p << '\n';
    } else {
        alg = modulus_hex.empty()
                  ? sdpmds::make_field_algebra(w)
                  : sdpmds::make_field_algebra(w, sdpmds::parse_hex(modulus_hex));
        std::cout << "kind=field\nw=" << w << '\n';
    }
    std::cout << "# " << alg->describe() << '\n';
    if (auto* fa = dynamic_cast<const sdpmds::FieldAlgebra*>(alg.get())) {
        std::cout << "modulus=" << sdpmds::to_hex(fa->field().modulus()) << '\n'
                  << "primitive=" << (fa->field().alpha_primitive() ? "yes" : "no") << '\n';
    } else if (auto* ra = dynamic_cast<const sdpmds::RingAlgebra*>(alg.get())) {
        std::cout << "modulus=" << sdpmds::to_hex(ra->ring().modulus()) << '\n'
                  << "factor_degree=" << ra->ring().factor_degree() << '\n';
        std::cout << "factors=";
        for (std::size_t i = 0; i < ra->ring().num_components(); ++i)
            std::cout << (i ? " " : "") << sdpmds::to_hex(ra->ring().factor(i));
        std::cout << '\n';
    }
    std::cout << "order_alpha=" << alg->order_alpha() << '\n'
              << "max_code_length=" << alg->max_code_length() << '\n';
    return kExitOk;
}

int cmd_construct(const std::string& config, const std::string& out) {
    sdpmds::CodeParams params = load_params(config);
    sdpmds::ParityCheckMatrix pcm = sdpmds::build_parity_check(params);
    std::ostringstream os;
    os << "# " << params.describe() << '\n'
       << "# " << pcm.matrix.rows() << " rows x " << pcm.matrix.cols() << " cols\n"
       << pcm.matrix.to_string();
    emit(os.str(), out);
    return kExitOk;
}

int cmd_encode(const std::string& config, const std::string& data_path,
               const std::string& out) {
    sdpmds::CodeParams params = load_params(config);
    sdpmds::Codec codec(params);
    std::vector<std::uint64_t> data = sdpmds::read_data_file(data_path, params);
    emit(sdpmds::array_to_text(codec.encode(data)), out);
    return kExitOk;
}

int cmd_decode(const std::string& config, const std::string& array_path,
               const std::string& pattern_path, const std::string& cols_arg,
               const std::string& out) {
    sdpmds::CodeParams params = load_params(config);
    sdpmds::Codec codec(params);
    sdpmds::StripeArray arr = sdpmds::read_array_file(array_path, params);

    sdpmds::ErasurePattern pattern;
    if (!pattern_path.empty()) {
        pattern = sdpmds::read_pattern_file(pattern_path, params);
    } else {
        std::vector<unsigned> cols;
        std::istringstream is(cols_arg);
        std::string token;
        while (std::getline(is, token, ','))
            cols.push_back(static_cast<unsigned>(sdpmds::parse_u64(token)));
        pattern = sdpmds::ErasurePattern::full_columns(cols, params.r, params.n);
    }

    sdpmds::DecodeResult result = codec.decode(arr, pattern);
    if (auto* u = std::get_if<sdpmds::Undecodable>(&result)) {
        std::cout << "# undecodable: " << u->reason << '\n' << "# deficient:";
        for (sdpmds::Cell c : u->deficient) std::cout << ' ' << c.row << ':' << c.col;
        std::cout << '\n';
        return kExitFail;
    }
    emit(sdpmds::array_to_text(std::get<sdpmds::StripeArray>(result)), out);
    return kExitOk;
}

int cmd_verify(const std::string& config, const std::string& property, unsigned jobs) {
    sdpmds::CodeParams params = load_params(config);
    sdpmds::Property prop;
    if (property == "sd") prop = sdpmds::Property::kSD;
    else if (property == "pmds") prop = sdpmds::Property::kPMDS;
    else throw sdpmds::Error("verify: --property must be sd or pmds");

    std::cout << "# property: " << sdpmds::property_name(prop) << '\n'
              << "# params: " << params.describe() << '\n';
    sdpmds::VerificationReport report = sdpmds::verify(params, prop, jobs);
    if (report.pass) {
        std::cout << "PASS " << report.patterns_checked << " patterns\n";
        return kExitOk;
    }
    std::cout << "FAIL " << report.patterns_checked << " patterns\n"
              << "counterexample: " << report.counterexample->to_string() << '\n';
    return kExitFail;
}

int cmd_lemma(const std::string& config, unsigned jobs) {
    sdpmds::CodeParams params = load_params(config);
    std::cout << "# determinant identity sweep: m=" << params.m << ", n=" << params.n
              << ", r=" << params.r << " over " << params.alg->describe() << '\n';
    sdpmds::VerificationReport report =
        sdpmds::check_lemma(params.m, params.n, params.r, params.alg, jobs);
    if (report.pass) {
        std::cout << "PASS " << report.patterns_checked << " tuples\n";
        return kExitOk;
    }
    std::cout << "FAIL " << report.patterns_checked << " tuples\n"
              << "counterexample: " << report.lemma_counterexample->describe() << '\n';
    return kExitFail;
}

int cmd_scenarios(const std::string& sd_config, const std::string& pmds_config,
                  std::uint64_t seed) {
    sdpmds::CodeParams sd_params = load_params(sd_config);
    sdpmds::CodeParams pmds_params = load_params(pmds_config);
    sdpmds::ScenarioReport report =
        sdpmds::run_failure_scenarios(sd_params, pmds_params, seed);
    for (const sdpmds::ScenarioCheck& s : report.scenarios) {
        std::cout << "# " << s.name << " [" << s.pattern.to_string() << "]: sd="
                  << (s.sd_decoded ? "decoded" : "undecodable")
                  << (s.require_sd ? "" : " (reported)") << " pmds="
                  << (s.pmds_decoded ? "decoded" : "undecodable")
                  << (s.require_pmds ? "" : " (reported)") << " -> "
                  << (s.pass ? "ok" : "FAIL") << '\n';
    }
    std::cout << (report.pass ? "PASS " : "FAIL ") << report.scenarios.size()
              << " scenarios\n";
    return report.pass ? kExitOk : kExitFail;
}

int cmd_bench(const std::string& config, std::uint64_t seed, unsigned count) {
    sdpmds::CodeParams params = load_params(config);
    sdpmds::Codec codec(params);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> col_pick(0, params.n - 1);
    std::uniform_int_distribution<unsigned> row_pick(0, params.r - 1);

    // Random m-column + 2-extra-cell patterns: within both guarantees.
    auto random_pattern = [&] {
        sdpmds::ErasurePattern p;
        std::vector<unsigned> cols;
        while (cols.size() < params.m) {
            unsigned c = col_pick(rng);
            if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
        }
        p = sdpmds::ErasurePattern::full_columns(cols, params.r, params.n);
        unsigned extras = 0;
        while (extras < 2) {
            sdpmds::Cell c{row_pick(rng), col_pick(rng)};
            if (!p.contains(c)) {
                p.insert(c);
                ++extras;
            }
        }
        return p;
    };

    auto start = std::chrono::steady_clock::now();
    for (unsigned it = 0; it < count; ++it) {
        sdpmds::StripeArray original =
            codec.encode(sdpmds::random_data_symbols(params, rng));
        sdpmds::ErasurePattern pattern = random_pattern();
        sdpmds::StripeArray damaged = original;
        for (sdpmds::Cell c : pattern) damaged.set(c.row, c.col, 0);
        sdpmds::DecodeResult res = codec.decode(damaged, pattern);
        auto* repaired = std::get_if<sdpmds::StripeArray>(&res);
        if (repaired == nullptr || !(*repaired == original))
            throw sdpmds::Error("bench: round trip failed at stripe " +
                                std::to_string(it));
    }
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    double secs = elapsed.count();
    std::cout << "# " << params.describe() << '\n';
    std::cout << "# encode+decode " << count << " stripes in " << secs << " s ("
              << (secs > 0 ? static_cast<double>(count) / secs : 0.0) << " stripes/s)\n";
    std::cout << "OK " << count << " stripes\n";
    return kExitOk;
}

const char* kFormatsFooter = R"(File formats (one example each):
  config        key=value lines:  variant=sd  r=3  n=5  m=1  algebra=field  w=4
                (field takes optional modulus=<hex>; algebra=ring takes p=<prime>)
  element       lowercase hex of its bit pattern, bit i = coeff of x^i: x^4+x+1 -> 13
  matrix dump   one row per line of space-separated hex elements; '#' lines are comments
  array file    r lines of n hex elements:  1 9 d f e
  data file     r(n-m)-2 whitespace-separated hex elements:  7 0 a 1
  pattern file  one line of row:col pairs:  0:1 2:3
Exit codes: 0 ok/PASS, 1 undecodable/FAIL, 2 usage or config error.)";

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Array codes with per-row column parities and two global parities:\n"
                 "construction, encoding, erasure decoding, and property verification\n"
                 "over GF(2^w) and over GF(2)[x]/(1+x+...+x^(p-1))."};
    app.require_subcommand(1);
    app.footer(kFormatsFooter);

    unsigned fi_w = 0, fi_p = 0;
    std::string fi_modulus;
    CLI::App* fi = app.add_subcommand("field-info", "Describe a field or ring algebra");
    CLI::Option* fi_w_opt = fi->add_option("--w", fi_w, "Field degree w (GF(2^w))");
    fi->add_option("--modulus", fi_modulus, "Field modulus, hex (default: least primitive)")
        ->needs(fi_w_opt);
    fi->add_option("--p", fi_p, "Ring prime p (GF(2)[x]/(1+x+...+x^(p-1)))")
        ->excludes(fi_w_opt);

    std::string co_config, co_out;
    CLI::App* co = app.add_subcommand("construct", "Print the parity-check matrix");
    co->add_option("--config", co_config, "Code config file")->required();
    co->add_option("--out", co_out, "Output file (default: stdout)");

    std::string en_config, en_data, en_out;
    CLI::App* en = app.add_subcommand("encode", "Systematically encode a data file");
    en->add_option("--config", en_config, "Code config file")->required();
    en->add_option("--data", en_data, "Data file, r(n-m)-2 hex symbols")->required();
    en->add_option("--out", en_out, "Output array file (default: stdout)");

    std::string de_config, de_array, de_pattern, de_cols, de_out;
    CLI::App* de = app.add_subcommand("decode", "Repair erased cells of an array");
    de->add_option("--config", de_config, "Code config file")->required();
    de->add_option("--array", de_array, "Array file (erased cells hold stale data)")
        ->required();
    CLI::Option* de_pat_opt =
        de->add_option("--pattern", de_pattern, "Erasure pattern file (row:col pairs)");
    de->add_option("--cols", de_cols, "Erase full columns, comma-separated")
        ->excludes(de_pat_opt);
    de->add_option("--out", de_out, "Output array file (default: stdout)");

    std::string ve_config, ve_property;
    unsigned ve_jobs = 1;
    CLI::App* ve = app.add_subcommand("verify", "Exhaustive erasure-pattern sweep");
    ve->add_option("--config", ve_config, "Code config file")->required();
    ve->add_option("--property", ve_property, "Property to sweep: sd or pmds")->required();
    ve->add_option("--jobs", ve_jobs, "Worker threads (0 = all cores, default 1)");

    std::string le_config;
    unsigned le_jobs = 1;
    CLI::App* le = app.add_subcommand(
        "lemma", "Check closed-form vs direct determinant on all index tuples");
    le->add_option("--config", le_config, "Code config file")->required();
    le->add_option("--jobs", le_jobs, "Worker threads (0 = all cores, default 1)");

    std::string sc_sd_config, sc_pmds_config;
    std::uint64_t sc_seed = 0;
    CLI::App* sc = app.add_subcommand(
        "scenarios", "Run the five-failure battery on 4x5 stripes (m=1)");
    sc->add_option("--sd-config", sc_sd_config, "SD code config (r=4, n=5, m=1)")
        ->required();
    sc->add_option("--pmds-config", sc_pmds_config, "PMDS code config (r=4, n=5, m=1)")
        ->required();
    sc->add_option("--seed", sc_seed, "Random data seed (default 0)");

    std::string be_config;
    std::uint64_t be_seed = 0;
    unsigned be_count = 10000;
    CLI::App* be = app.add_subcommand("bench", "Time encode+decode over random stripes");
    be->add_option("--config", be_config, "Code config file")->required();
    be->add_option("--seed", be_seed, "Random seed (default 0)");
    be->add_option("--count", be_count, "Stripe count (default 10000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*fi) {
            if ((fi_w == 0) == (fi_p == 0)) {
                std::cerr << "error: field-info needs exactly one of --w or --p\n";
                return kExitUsage;
            }
            return cmd_field_info(fi_w, fi_modulus, fi_p);
        }
        if (*co) return cmd_construct(co_config, co_out);
        if (*en) return cmd_encode(en_config, en_data, en_out);
        if (*de) {
            if (de_pattern.empty() == de_cols.empty()) {
                std::cerr << "error: decode needs exactly one of --pattern or --cols\n";
                return kExitUsage;
            }
            return cmd_decode(de_config, de_array, de_pattern, de_cols, de_out);
        }
        if (*ve) return cmd_verify(ve_config, ve_property, ve_jobs);
        if (*le) return cmd_lemma(le_config, le_jobs);
        if (*sc) return cmd_scenarios(sc_sd_config, sc_pmds_config, sc_seed);
        if (*be) return cmd_bench(be_config, be_seed, be_count);
    } catch (const sdpmds::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
