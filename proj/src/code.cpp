#include "sdpmds/code.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "sdpmds/error.hpp"
#include "sdpmds/hex.hpp"

namespace sdpmds {

std::string variant_name(Variant v) {
    return v == Variant::kSD ? "sd" : "pmds";
}

std::string CodeParams::describe() const {
    std::ostringstream os;
    os << (variant == Variant::kSD ? "SD" : "PMDS") << " code, r=" << r << ", n=" << n
       << ", m=" << m << ", s=" << s;
    if (variant == Variant::kPMDS) os << ", stride N=" << N();
    os << ", over " << (alg ? alg->describe() : std::string("<no algebra>"));
    return os.str();
}

std::vector<std::string> validate(const CodeParams& params) {
    if (!params.alg) throw Error("validate: no algebra attached");
    if (params.s != 2)
        throw Error("validate: s must be 2 for this construction, got " +
                    std::to_string(params.s));
    if (params.n < 3 || params.m < 1 || params.m > params.n - 2)
        throw Error("validate: m out of range, need 1 <= m <= n-2 (m=" +
                    std::to_string(params.m) + ", n=" + std::to_string(params.n) + ")");
    if (params.r < 1) throw Error("validate: r must be at least 1");

    // The cross-row determinant argument needs every exponent gap to stay
    // below the order of alpha: rn for SD, rN for PMDS.
    std::uint64_t need = params.variant == Variant::kSD
                             ? params.stripe_len()
                             : std::uint64_t{params.r} * params.N();
    std::uint64_t have = params.alg->max_code_length();
    if (need > have) {
        std::ostringstream os;
        os << "validate: order bound violated: "
           << (params.variant == Variant::kSD ? "r*n = " : "r*N = ") << need
           << " exceeds " << have << " for " << params.alg->describe();
        throw Error(os.str());
    }

    std::vector<std::string> warnings;
    if (params.r == 1)
        warnings.push_back("r=1 stripe: cross-row coverage is vacuous; accepted");
    return warnings;
}

ParityCheckMatrix build_parity_check(const CodeParams& params) {
    validate(params);
    const Algebra& A = *params.alg;
    Matrix H(params.alg, params.parity_count(), params.stripe_len());

    for (unsigned j = 0; j < params.r; ++j)
        for (unsigned k = 0; k < params.m; ++k)
            for (unsigned i = 0; i < params.n; ++i)
                H.set(std::size_t{j} * params.m + k, std::size_t{j} * params.n + i,
                      A.alpha_pow(static_cast<long long>(k) * i));

    unsigned stride = params.variant == Variant::kSD ? params.n : params.N();
    std::size_t g1 = std::size_t{params.m} * params.r;
    for (unsigned j = 0; j < params.r; ++j)
        for (unsigned i = 0; i < params.n; ++i) {
            std::size_t col = std::size_t{j} * params.n + i;
            H.set(g1, col, A.alpha_pow(static_cast<long long>(params.m) * i));
            H.set(g1 + 1, col,
                  A.alpha_pow(-(static_cast<long long>(j) * stride + i)));
        }
    return ParityCheckMatrix{params, std::move(H)};
}

void LemmaInputs::check() const {
    if (i_list.size() != j_list.size())
        throw Error("lemma inputs: index lists differ in length");
    if (i_list.size() < 2)
        throw Error("lemma inputs: need at least 2 indices per list (m >= 1)");
    for (unsigned v : i_list)
        if (v >= n) throw Error("lemma inputs: i index " + std::to_string(v) +
                                " out of range for n=" + std::to_string(n));
    for (unsigned v : j_list)
        if (v >= n) throw Error("lemma inputs: j index " + std::to_string(v) +
                                " out of range for n=" + std::to_string(n));
    if (r < 1 || ell > r - 1)
        throw Error("lemma inputs: row gap ell=" + std::to_string(ell) +
                    " out of range for r=" + std::to_string(r));
}

void LemmaInputs::check_distinct() const {
    check();
    std::set<unsigned> is(i_list.begin(), i_list.end());
    std::set<unsigned> js(j_list.begin(), j_list.end());
    if (is.size() != i_list.size() || js.size() != j_list.size())
        throw Error("lemma inputs: duplicate indices within a list");
}

std::string LemmaInputs::describe() const {
    std::ostringstream os;
    os << "i=(";
    for (std::size_t u = 0; u < i_list.size(); ++u) os << (u ? "," : "") << i_list[u];
    os << ") j=(";
    for (std::size_t u = 0; u < j_list.size(); ++u) os << (u ? "," : "") << j_list[u];
    os << ") ell=" << ell << " n=" << n << " r=" << r;
    return os.str();
}

Matrix build_lemma_matrix(std::shared_ptr<const Algebra> alg, const LemmaInputs& inp) {
    inp.check();
    const Algebra& A = *alg;
    unsigned m = inp.m();
    std::size_t dim = 2 * std::size_t{m} + 2;
    Matrix M(alg, dim, dim);

    for (unsigned k = 0; k < m; ++k)
        for (unsigned u = 0; u <= m; ++u) {
            M.set(k, u, A.alpha_pow(static_cast<long long>(k) * inp.i_list[u]));
            M.set(std::size_t{m} + k, std::size_t{m} + 1 + u,
                  A.alpha_pow(static_cast<long long>(k) * inp.j_list[u]));
        }
    for (unsigned u = 0; u <= m; ++u) {
        M.set(2 * std::size_t{m}, u, A.alpha_pow(static_cast<long long>(m) * inp.i_list[u]));
        M.set(2 * std::size_t{m}, std::size_t{m} + 1 + u,
              A.alpha_pow(static_cast<long long>(m) * inp.j_list[u]));
        M.set(2 * std::size_t{m} + 1, u, A.alpha_pow(-static_cast<long long>(inp.i_list[u])));
        M.set(2 * std::size_t{m} + 1, std::size_t{m} + 1 + u,
              A.alpha_pow(-static_cast<long long>(inp.n) * inp.ell -
                          static_cast<long long>(inp.j_list[u])));
    }
    return M;
}

std::uint64_t delta_closed_form(const Algebra& alg, const LemmaInputs& inp) {
    inp.check();
    unsigned m = inp.m();
    std::uint64_t prod = 1;
    long long sum_i = 0, sum_j = 0;
    for (unsigned u = 0; u <= m; ++u) {
        sum_i += inp.i_list[u];
        sum_j += inp.j_list[u];
        for (unsigned v = u + 1; v <= m; ++v) {
            std::uint64_t bi =
                alg.add(alg.alpha_pow(inp.i_list[u]), alg.alpha_pow(inp.i_list[v]));
            std::uint64_t bj =
                alg.add(alg.alpha_pow(inp.j_list[u]), alg.alpha_pow(inp.j_list[v]));
            prod = alg.mul(prod, alg.mul(bi, bj));
        }
    }
    std::uint64_t tail = alg.add(alg.alpha_pow(-sum_i),
                                 alg.alpha_pow(-static_cast<long long>(inp.n) * inp.ell - sum_j));
    return alg.mul(prod, tail);
}

bool delta_nonzero_condition(const Algebra& alg, const LemmaInputs& inp) {
    inp.check();
    long long sum_i = 0, sum_j = 0;
    for (unsigned u = 0; u < inp.i_list.size(); ++u) {
        sum_i += inp.i_list[u];
        sum_j += inp.j_list[u];
    }
    long long ord = static_cast<long long>(alg.order_alpha());
    long long gap = (static_cast<long long>(inp.n) * inp.ell + sum_j - sum_i) % ord;
    if (gap < 0) gap += ord;
    return gap != 0;
}

namespace {

unsigned parse_uint_field(const std::string& key, const std::string& value) {
    std::uint64_t v = parse_u64(value);
    if (v == 0 || v > 1u << 20)
        throw Error("config: implausible value for " + key + ": " + value);
    return static_cast<unsigned>(v);
}

} // namespace

CodeConfig parse_code_config(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // Trim surrounding whitespace; skip blanks and # comments.
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        std::string t = line.substr(b, e - b + 1);
        if (t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw Error("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = t.substr(0, eq);
        std::string value = t.substr(eq + 1);
        if (key.empty() || value.empty())
            throw Error("config line " + std::to_string(lineno) + ": empty key or value");
        if (!kv.emplace(key, value).second)
            throw Error("config: duplicate key '" + key + "'");
    }

    static const std::set<std::string> known = {"variant", "r", "n", "m",
                                                "algebra", "w", "modulus", "p"};
    for (const auto& [key, value] : kv)
        if (!known.count(key)) throw Error("config: unknown key '" + key + "'");

    auto require = [&](const std::string& key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end()) throw Error("config: missing key '" + key + "'");
        return it->second;
    };

    CodeConfig cfg;
    const std::string& variant = require("variant");
    if (variant == "sd") cfg.variant = Variant::kSD;
    else if (variant == "pmds") cfg.variant = Variant::kPMDS;
    else throw Error("config: variant must be 'sd' or 'pmds', got '" + variant + "'");

    cfg.r = parse_uint_field("r", require("r"));
    cfg.n = parse_uint_field("n", require("n"));
    cfg.m = parse_uint_field("m", require("m"));

    const std::string& algebra = require("algebra");
    if (algebra == "field") {
        cfg.kind = CodeConfig::AlgebraKind::kField;
        cfg.w = parse_uint_field("w", require("w"));
        if (kv.count("modulus")) cfg.modulus = parse_hex(kv.at("modulus"));
        if (kv.count("p")) throw Error("config: key 'p' is only valid for algebra=ring");
    } else if (algebra == "ring") {
        cfg.kind = CodeConfig::AlgebraKind::kRing;
        cfg.p = parse_uint_field("p", require("p"));
        if (kv.count("w")) throw Error("config: key 'w' is only valid for algebra=field");
        if (kv.count("modulus"))
            throw Error("config: key 'modulus' is only valid for algebra=field");
    } else {
        throw Error("config: algebra must be 'field' or 'ring', got '" + algebra + "'");
    }
    return cfg;
}

CodeConfig load_code_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file: " + path);
    return parse_code_config(in);
}

CodeParams make_code_params(const CodeConfig& cfg, std::vector<std::string>* warnings) {
    CodeParams params;
    params.variant = cfg.variant;
    params.r = cfg.r;
    params.n = cfg.n;
    params.m = cfg.m;
    if (cfg.kind == CodeConfig::AlgebraKind::kField)
        params.alg = cfg.modulus ? make_field_algebra(cfg.w, *cfg.modulus)
                                 : make_field_algebra(cfg.w);
    else
        params.alg = make_ring_algebra(cfg.p);
    std::vector<std::string> w = validate(params);
    if (warnings) warnings->insert(warnings->end(), w.begin(), w.end());
    return params;
}

} // namespace sdpmds
