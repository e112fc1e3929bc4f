#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <variant>

#include "sdpmds/codec.hpp"
#include "sdpmds/error.hpp"

#include "test_util.hpp"

using namespace sdpmds;

namespace {

CodeParams sd_params(unsigned r, unsigned n, unsigned m,
                     std::shared_ptr<const Algebra> alg) {
    CodeParams p;
    p.variant = Variant::kSD;
    p.r = r;
    p.n = n;
    p.m = m;
    p.alg = std::move(alg);
    return p;
}

StripeArray expect_array(const DecodeResult& res) {
    REQUIRE(std::holds_alternative<StripeArray>(res));
    return std::get<StripeArray>(res);
}

Undecodable expect_undecodable(const DecodeResult& res) {
    REQUIRE(std::holds_alternative<Undecodable>(res));
    return std::get<Undecodable>(res);
}

bool all_zero(const std::vector<std::uint64_t>& v) {
    return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

} // namespace

TEST_CASE("erasure pattern basics") {
    ErasurePattern p;
    p.insert({1, 3});
    p.insert({0, 4});
    p.insert({1, 0});
    CHECK(p.size() == 3);
    CHECK(p.contains({0, 4}));
    CHECK_FALSE(p.contains({2, 2}));
    CHECK_THROWS_AS(p.insert({1, 3}), Error);

    CHECK(p.to_string() == "0:4 1:0 1:3");
    CHECK(ErasurePattern::parse("1:3  0:4 1:0") == p);
    CHECK(ErasurePattern::parse(p.to_string()) == p);
    CHECK(ErasurePattern::parse("").empty());

    CHECK(p.coordinates(5) == std::vector<std::size_t>{4, 5, 8});

    CHECK_THROWS_AS(ErasurePattern::parse("1:2 3"), Error);
    CHECK_THROWS_AS(ErasurePattern::parse("a:b"), Error);
    CHECK_THROWS_AS(ErasurePattern::parse("1:2 1:2"), Error);

    CHECK_NOTHROW(p.check_in_range(2, 5));
    CHECK_THROWS_AS(p.check_in_range(2, 4), Error); // col 4 out of range
    CHECK_THROWS_AS(p.check_in_range(1, 5), Error); // row 1 out of range

    ErasurePattern cols = ErasurePattern::full_columns({2, 0}, 3, 5);
    CHECK(cols.size() == 6);
    CHECK(cols.to_string() == "0:0 0:2 1:0 1:2 2:0 2:2");
    CHECK_THROWS_AS(ErasurePattern::full_columns({5}, 3, 5), Error);
}

TEST_CASE("stripe array indexing") {
    CodeParams p = sd_params(3, 5, 1, make_field_algebra(4));
    StripeArray arr = StripeArray::zero(p);
    REQUIRE(arr.cells.size() == 15);
    arr.set(1, 2, 0xa);
    CHECK(arr.at(1, 2) == 0xa);
    CHECK(arr.cells[1 * 5 + 2] == 0xa);
    CHECK_THROWS_AS(arr.at(3, 0), Error);
    CHECK_THROWS_AS(arr.set(0, 5, 1), Error);
    CHECK_THROWS_AS(arr.set(0, 0, 16), Error); // not a GF(16) element
}

TEST_CASE("parity positions are the documented cells") {
    CodeParams p = sd_params(3, 5, 1, make_field_algebra(4));
    ErasurePattern pp = parity_positions(p);
    CHECK(pp.size() == p.parity_count());
    CHECK(pp.to_string() == "0:4 1:4 2:2 2:3 2:4");

    CodeParams q = sd_params(3, 5, 2, make_field_algebra(4));
    ErasurePattern qq = parity_positions(q);
    CHECK(qq.size() == 8);
    CHECK(qq.to_string() == "0:3 0:4 1:3 1:4 2:1 2:2 2:3 2:4");
}

TEST_CASE("encode places data row-major and zeroes every syndrome") {
    for (std::shared_ptr<const Algebra> alg :
         {make_field_algebra(4), make_field_algebra(5), make_ring_algebra(7),
          make_ring_algebra(17)}) {
        unsigned r = alg->max_code_length() >= 15 ? 3 : 2;
        unsigned n = alg->max_code_length() >= 15 ? 5 : 3;
        CodeParams p = sd_params(r, n, 1, alg);
        Codec codec(p);

        std::mt19937_64 rng(42);
        std::vector<std::uint64_t> data = random_data_symbols(p, rng);
        REQUIRE(data.size() == p.data_count());
        StripeArray arr = codec.encode(data);

        CHECK(all_zero(codec.syndrome(arr)));

        // Data cells are filled row-major, skipping parity positions.
        std::size_t next = 0;
        for (unsigned row = 0; row < p.r; ++row)
            for (unsigned col = 0; col < p.n; ++col)
                if (!codec.parities().contains({row, col}))
                    CHECK(arr.at(row, col) == data[next++]);
        CHECK(next == data.size());

        StripeArray zeros = codec.encode(
            std::vector<std::uint64_t>(p.data_count(), 0));
        CHECK(zeros == StripeArray::zero(p));

        CHECK_THROWS_AS(codec.encode(std::vector<std::uint64_t>(p.data_count() + 1, 0)),
                        Error);
    }
}

TEST_CASE("syndrome is the parity-check matrix times the cell vector") {
    CodeParams p = sd_params(3, 5, 1, make_field_algebra(4));
    Codec codec(p);
    const Matrix& H = codec.parity_check().matrix;

    // A single nonzero cell picks out one scaled column of H.
    StripeArray arr = StripeArray::zero(p);
    arr.set(1, 3, 0x7);
    std::vector<std::uint64_t> syn = codec.syndrome(arr);
    REQUIRE(syn.size() == H.rows());
    for (std::size_t k = 0; k < H.rows(); ++k)
        CHECK(syn[k] == p.alg->mul(H.at(k, 1 * 5 + 3), 0x7));

    // General stripe: match an independent dot product.
    std::mt19937_64 rng(7);
    StripeArray full = codec.encode(random_data_symbols(p, rng));
    full.set(0, 0, p.alg->add(full.at(0, 0), 0x9)); // break it
    std::vector<std::uint64_t> syn2 = codec.syndrome(full);
    for (std::size_t k = 0; k < H.rows(); ++k) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < H.cols(); ++c)
            acc = p.alg->add(acc, p.alg->mul(H.at(k, c),
                                             full.cells[c]));
        CHECK(syn2[k] == acc);
    }
    CHECK_FALSE(all_zero(syn2));

    CodeParams other = sd_params(3, 5, 1, make_field_algebra(5));
    CHECK_THROWS_AS(codec.syndrome(StripeArray::zero(other)), Error);
}

TEST_CASE("decode round-trips the classic patterns") {
    CodeParams p = sd_params(3, 5, 1, make_field_algebra(4));
    Codec codec(p);
    std::mt19937_64 rng(123);
    StripeArray arr = codec.encode(random_data_symbols(p, rng));

    auto roundtrip = [&](const std::string& pattern_text) {
        ErasurePattern pattern = ErasurePattern::parse(pattern_text);
        StripeArray damaged = arr;
        for (const Cell& c : pattern) damaged.set(c.row, c.col, 0);
        CHECK(expect_array(codec.decode(damaged, pattern)) == arr);
    };

    roundtrip("0:4 1:4 2:2 2:3 2:4");       // the parity cells themselves
    roundtrip("0:1 1:1 2:1 0:0 0:3");       // full column + 2 extras, same row
    roundtrip("0:2 1:2 2:2 0:0 1:4");       // full column + 2 extras, split rows
    roundtrip("0:0 1:1 2:4");               // one erasure per row
    roundtrip("2:0 2:1 2:2");               // m+2 in a single row
}

TEST_CASE("decode ignores stale contents of erased cells") {
    CodeParams p = sd_params(3, 5, 1, make_field_algebra(4));
    Codec codec(p);
    std::mt19937_64 rng(5);
    StripeArray arr = codec.encode(random_data_symbols(p, rng));

    ErasurePattern pattern = ErasurePattern::parse("0:0 1:2 2:4");
    StripeArray junk = arr;
    junk.set(0, 0, 0xf);
    junk.set(1, 2, p.alg->add(arr.at(1, 2), 1)); // wrong but in range
    CHECK(expect_array(codec.decode(junk, pattern)) == arr);
}

TEST_CASE("decode with an empty pattern returns the stripe unchanged") {
    CodeParams p = sd_params(3, 5, 1, make_field_algebra(4));
    Codec codec(p);
    std::mt19937_64 rng(9);
    StripeArray arr = codec.encode(random_data_symbols(p, rng));
    CHECK(expect_array(codec.decode(arr, ErasurePattern())) == arr);
}

TEST_CASE("the code is linear: sums of codewords are codewords") {
    CodeParams p = sd_params(3, 5, 1, make_field_algebra(4));
    Codec codec(p);
    std::mt19937_64 rng(77);
    StripeArray a = codec.encode(random_data_symbols(p, rng));
    StripeArray b = codec.encode(random_data_symbols(p, rng));
    StripeArray sum = StripeArray::zero(p);
    for (std::size_t i = 0; i < sum.cells.size(); ++i)
        sum.cells[i] = p.alg->add(a.cells[i], b.cells[i]);
    CHECK(all_zero(codec.syndrome(sum)));
}

TEST_CASE("oversized patterns are rejected as undecodable, not solved") {
    CodeParams p = sd_params(3, 5, 1, make_field_algebra(4));
    Codec codec(p);
    ErasurePattern pattern = ErasurePattern::parse("0:0 0:1 1:0 1:1 2:0 2:1");
    Undecodable u = expect_undecodable(codec.decode(StripeArray::zero(p), pattern));
    CHECK(u.deficient.size() == 6);
    CHECK(u.reason.find("more than the mr+2") != std::string::npos);
}

TEST_CASE("a row with too many erasures reports the unresolved cells") {
    CodeParams p = sd_params(3, 5, 1, make_field_algebra(4));
    Codec codec(p);
    // Four erasures in one row: only 3 equations ever touch row 0.
    ErasurePattern pattern = ErasurePattern::parse("0:0 0:1 0:2 0:3");
    Undecodable u = expect_undecodable(codec.decode(StripeArray::zero(p), pattern));
    CHECK_FALSE(u.deficient.empty());
    for (const Cell& c : u.deficient) CHECK(c.row == 0);
}

TEST_CASE("decode verdict equals the rank verdict on random patterns") {
    CodeParams p = sd_params(3, 5, 1, make_field_algebra(4));
    Codec codec(p);
    const ParityCheckMatrix& pcm = codec.parity_check();
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<unsigned> row_dist(0, p.r - 1);
    std::uniform_int_distribution<unsigned> col_dist(0, p.n - 1);
    std::uniform_int_distribution<std::size_t> size_dist(1, p.parity_count());

    StripeArray arr = codec.encode(random_data_symbols(p, rng));
    for (int trial = 0; trial < 300; ++trial) {
        ErasurePattern pattern;
        std::size_t want = size_dist(rng);
        while (pattern.size() < want) {
            Cell c{row_dist(rng), col_dist(rng)};
            if (!pattern.contains(c)) pattern.insert(c);
        }
        bool rank_ok = pattern_decodable(pcm, pattern);
        DecodeResult res = codec.decode(arr, pattern);
        CHECK(std::holds_alternative<StripeArray>(res) == rank_ok);
        if (rank_ok) CHECK(std::get<StripeArray>(res) == arr);
    }
}

TEST_CASE("ring codec round-trips and matches the rank verdict") {
    CodeParams p = sd_params(3, 5, 1, make_ring_algebra(17));
    Codec codec(p);
    std::mt19937_64 rng(31337);
    StripeArray arr = codec.encode(random_data_symbols(p, rng));
    CHECK(all_zero(codec.syndrome(arr)));

    ErasurePattern pattern = ErasurePattern::parse("0:3 1:3 2:3 1:0 2:1");
    StripeArray damaged = arr;
    for (const Cell& c : pattern) damaged.set(c.row, c.col, 0);
    CHECK(expect_array(codec.decode(damaged, pattern)) == arr);

    // The zero-divisor structure must not fool the verdicts.
    const ParityCheckMatrix& pcm = codec.parity_check();
    std::uniform_int_distribution<unsigned> row_dist(0, 2), col_dist(0, 4);
    for (int trial = 0; trial < 100; ++trial) {
        ErasurePattern pat;
        while (pat.size() < 5) {
            Cell c{row_dist(rng), col_dist(rng)};
            if (!pat.contains(c)) pat.insert(c);
        }
        DecodeResult res = codec.decode(arr, pat);
        CHECK(std::holds_alternative<StripeArray>(res) == pattern_decodable(pcm, pat));
    }
}

TEST_CASE("corrupted survivors are detected, not silently accepted") {
    CodeParams p = sd_params(3, 5, 1, make_field_algebra(4));
    Codec codec(p);
    std::mt19937_64 rng(99);
    StripeArray arr = codec.encode(random_data_symbols(p, rng));

    // Corrupt an unerased cell; the final consistency check must fire.
    StripeArray bad = arr;
    bad.set(1, 1, p.alg->add(arr.at(1, 1), 3));
    CHECK_THROWS_WITH_AS(codec.decode(bad, ErasurePattern::parse("0:0")),
                         doctest::Contains("not consistent"), Error);

    // With m=2 a single-row repair is overdetermined, so corruption in
    // the same row trips the local phase.
    CodeParams p2 = sd_params(3, 5, 2, make_field_algebra(4));
    Codec codec2(p2);
    StripeArray arr2 = codec2.encode(random_data_symbols(p2, rng));
    StripeArray bad2 = arr2;
    bad2.set(0, 1, p2.alg->add(arr2.at(0, 1), 1));
    CHECK_THROWS_WITH_AS(codec2.decode(bad2, ErasurePattern::parse("0:0")),
                         doctest::Contains("not consistent"), Error);
}

TEST_CASE("random data symbols are deterministic, sized, and in range") {
    CodeParams p = sd_params(3, 5, 1, make_field_algebra(4));
    std::mt19937_64 a(1), b(1), c(2);
    std::vector<std::uint64_t> da = random_data_symbols(p, a);
    std::vector<std::uint64_t> db = random_data_symbols(p, b);
    std::vector<std::uint64_t> dc = random_data_symbols(p, c);
    CHECK(da == db);
    CHECK(da != dc);
    CHECK(da.size() == p.data_count());
    for (std::uint64_t v : da) CHECK(v < 16);

    CodeParams ring = sd_params(3, 5, 1, make_ring_algebra(17));
    std::mt19937_64 r(3);
    for (std::uint64_t v : random_data_symbols(ring, r))
        CHECK(v < (std::uint64_t{1} << 16));
}
