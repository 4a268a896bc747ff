#include <doctest.h>

#include <numeric>

#include "fseg/oracle.hpp"
#include "fseg/pbwt.hpp"
#include "testutil.hpp"

using namespace fseg;
namespace tu = fseg::testutil;

namespace {

PbwtColumn step_to(const Panel& p, pos_t k, bool jump) {
    PbwtScratch scratch(p.sigma());
    PbwtColumn cur = pbwt_init(p.rows());
    for (pos_t c = 1; c <= k; ++c) {
        const auto col = p.column(c);
        cur = jump ? pbwt_step_jump(std::move(cur), col, scratch)
                   : pbwt_step_rmq(cur, col, scratch);
    }
    return cur;
}

// Reversed prefix comparison done the long way, for the sortedness check.
bool reversed_leq(const Panel& p, std::uint32_t x, std::uint32_t y, pos_t k) {
    for (pos_t c = k; c >= 1; --c) {
        if (p.symbol(x, c) != p.symbol(y, c))
            return p.symbol(x, c) < p.symbol(y, c);
    }
    return true;
}

} // namespace

TEST_SUITE("pbwt") {

TEST_CASE("initial column") {
    const PbwtColumn c = pbwt_init(3);
    CHECK(c.k == 0);
    CHECK(c.a == std::vector<std::uint32_t>{1, 2, 3});
    CHECK(c.d == std::vector<pos_t>{1, 1, 1});

    CHECK(pbwt_init(1).a == std::vector<std::uint32_t>{1});
    CHECK(pbwt_init(6).d == std::vector<pos_t>(6, 1));
    CHECK_THROWS_AS(pbwt_init(0), EmptyInput);
}

TEST_CASE("golden fixture at k = 7, both variants") {
    const Panel p = tu::fixture_panel();
    const std::vector<std::uint32_t> a7 = {2, 6, 4, 1, 3, 5};
    const std::vector<pos_t> d7 = {8, 8, 5, 3, 7, 3};
    for (bool jump : {false, true}) {
        const PbwtColumn c = step_to(p, 7, jump);
        CHECK(c.k == 7);
        CHECK(c.a == a7);
        CHECK(c.d == d7);
    }
}

TEST_CASE("two equal symbols") {
    PbwtScratch scratch(2);
    const std::vector<std::uint8_t> col = {0, 0};
    const PbwtColumn c = pbwt_step_rmq(pbwt_init(2), col, scratch);
    CHECK(c.a == std::vector<std::uint32_t>{1, 2});
    CHECK(c.d == std::vector<pos_t>{2, 1});
}

TEST_CASE("single row") {
    PbwtScratch scratch(4);
    PbwtColumn c = pbwt_init(1);
    for (pos_t k = 1; k <= 5; ++k) {
        c = pbwt_step_jump(std::move(c), std::vector<std::uint8_t>{static_cast<std::uint8_t>(k % 4)},
                           scratch);
        CHECK(c.a == std::vector<std::uint32_t>{1});
        CHECK(c.d == std::vector<pos_t>{k + 1});
    }
}

TEST_CASE("identical rows") {
    const Panel p = Panel::from_rows({"acac", "acac", "acac"});
    for (pos_t k = 1; k <= 4; ++k) {
        const PbwtColumn c = naive_pbwt(p, k);
        CHECK(c.a == std::vector<std::uint32_t>{1, 2, 3});
        CHECK(c.d == std::vector<pos_t>{k + 1, 1, 1});
        CHECK(step_to(p, k, true).d == c.d);
    }
}

TEST_CASE("naive oracle golden values and bounds") {
    const Panel p = tu::fixture_panel();
    const PbwtColumn c = naive_pbwt(p, 7);
    CHECK(c.a == std::vector<std::uint32_t>{2, 6, 4, 1, 3, 5});
    CHECK(c.d == std::vector<pos_t>{8, 8, 5, 3, 7, 3});
    CHECK_THROWS_AS(naive_pbwt(p, 0), OutOfRange);
    CHECK_THROWS_AS(naive_pbwt(p, 8), OutOfRange);
}

TEST_CASE("maxd on a fresh table") {
    std::vector<std::uint32_t> jump = {2, 3, 4, 5};
    std::vector<pos_t> vals = {5, 3, 7, 2};
    CHECK(maxd(1, 4, jump, vals) == 7);
    CHECK(jump == std::vector<std::uint32_t>{5, 5, 5, 5});

    // j == i leaves everything untouched
    std::vector<std::uint32_t> jump2 = {2, 3};
    std::vector<pos_t> vals2 = {9, 4};
    CHECK(maxd(2, 2, jump2, vals2) == 4);
    CHECK(jump2 == std::vector<std::uint32_t>{2, 3});
    CHECK(vals2 == std::vector<pos_t>{9, 4});
}

TEST_CASE("maxd equals a naive scan and keeps the jump-table invariant") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 50; ++it) {
        const std::uint32_t m = 2 + static_cast<std::uint32_t>(rng() % 30);
        std::vector<pos_t> pristine(m);
        for (auto& v : pristine)
            v = 1 + rng() % 20;
        std::vector<pos_t> vals = pristine;
        std::vector<std::uint32_t> jump(m);
        std::iota(jump.begin(), jump.end(), 2u);

        // right ends strictly increase across queries, as in the update loop
        std::uint32_t i = 1 + static_cast<std::uint32_t>(rng() % m);
        for (int q = 0; q < 12; ++q) {
            const std::uint32_t j = 1 + static_cast<std::uint32_t>(rng() % i);
            pos_t expect = 0;
            for (std::uint32_t l = j; l <= i; ++l)
                expect = std::max(expect, pristine[l - 1]);
            CHECK(maxd(j, i, jump, vals) == expect);

            for (std::uint32_t p = 1; p <= i; ++p) {
                REQUIRE(jump[p - 1] > p);
                REQUIRE(jump[p - 1] <= i + 1);
                pos_t window = 0;
                for (std::uint32_t l = p; l < jump[p - 1]; ++l)
                    window = std::max(window, pristine[l - 1]);
                REQUIRE(vals[p - 1] == window);
            }
            if (i == m)
                break;
            i += 1 + static_cast<std::uint32_t>(rng() % (m - i));
        }
    }
}

TEST_CASE("random panels match the definition at every column") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 40; ++it) {
        const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng() % 6);
        const pos_t n = 1 + rng() % 12;
        const std::uint32_t sigma = 2 + static_cast<std::uint32_t>(rng() % 3);
        const Panel p = tu::random_panel(rng, m, n, sigma);

        PbwtScratch scratch(sigma);
        PbwtColumn rmq_col = pbwt_init(m);
        PbwtColumn jump_col = pbwt_init(m);
        for (pos_t k = 1; k <= n; ++k) {
            const auto col = p.column(k);
            rmq_col = pbwt_step_rmq(rmq_col, col, scratch);
            jump_col = pbwt_step_jump(std::move(jump_col), col, scratch);
            const PbwtColumn ref = naive_pbwt(p, k);
            REQUIRE(rmq_col.a == ref.a);
            REQUIRE(rmq_col.d == ref.d);
            REQUIRE(jump_col.a == ref.a);
            REQUIRE(jump_col.d == ref.d);
        }
    }
}

TEST_CASE("structural invariants on random panels") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 30; ++it) {
        const std::uint32_t m = 2 + static_cast<std::uint32_t>(rng() % 7);
        const pos_t n = 1 + rng() % 10;
        const std::uint32_t sigma = 2 + static_cast<std::uint32_t>(rng() % 2);
        const Panel p = tu::random_panel(rng, m, n, sigma);

        PbwtScratch scratch(sigma);
        PbwtColumn c = pbwt_init(m);
        for (pos_t k = 1; k <= n; ++k) {
            c = pbwt_step_rmq(c, p.column(k), scratch);

            auto sorted = c.a;
            std::sort(sorted.begin(), sorted.end());
            for (std::uint32_t i = 0; i < m; ++i)
                REQUIRE(sorted[i] == i + 1); // permutation

            REQUIRE(c.d[0] == k + 1);
            for (std::uint32_t i = 1; i < m; ++i) {
                REQUIRE(reversed_leq(p, c.a[i - 1], c.a[i], k)); // sortedness
                const pos_t d = c.d[i];
                REQUIRE(d >= 1);
                REQUIRE(d <= k + 1);
                for (pos_t col = d; col <= k; ++col) // common suffix [d, k]
                    REQUIRE(p.symbol(c.a[i], col) == p.symbol(c.a[i - 1], col));
                if (d >= 2) // and a mismatch right before it
                    REQUIRE(p.symbol(c.a[i], d - 1) != p.symbol(c.a[i - 1], d - 1));
            }
        }
    }
}

TEST_CASE("column errors") {
    PbwtScratch scratch(2);
    const PbwtColumn init = pbwt_init(2);
    CHECK_THROWS_AS(pbwt_step_rmq(init, std::vector<std::uint8_t>{0, 7}, scratch),
                    SymbolOutOfRange);
    CHECK_THROWS_AS(pbwt_step_rmq(init, std::vector<std::uint8_t>{0}, scratch), OutOfRange);
}

} // TEST_SUITE
