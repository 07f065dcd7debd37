#include <catch2/catch_amalgamated.hpp>

#include <elk/rouhani.hpp>

using namespace elk;

namespace {

// Closed-form oracle for A_m = sum_{n>=1} n^m / 2^n: the shift n -> n+1
// gives the exact recurrence A_m = 1 + sum_{k<m} C(m,k) A_k with A_0 = 1.
std::vector<Int> oracle_series_limits(int orders) {
    std::vector<Int> a{1};
    std::vector<std::vector<Int>> choose{{1}};
    for (int m = 1; m <= orders; ++m) {
        std::vector<Int> row{1};
        for (int k = 1; k < m; ++k) row.push_back(choose[m - 1][k - 1] + choose[m - 1][k]);
        row.push_back(1);
        choose.push_back(row);
        Int val = 1;
        for (int k = 0; k < m; ++k) val += choose[m][k] * a[k];
        a.push_back(val);
    }
    return a;
}

}  // namespace

TEST_CASE("series limits oracle reproduces the known values", "[rouhani][oracle]") {
    // 1, 2, 6, 26, 150, 1082, 9366: twice the ordered Bell numbers from m=1.
    CHECK(oracle_series_limits(6) ==
          std::vector<Int>{1, 2, 6, 26, 150, 1082, 9366});
}

TEST_CASE("parameter tower and dyadic partial sums", "[rouhani]") {
    RouhaniParameters p = rouhani_parameters(3);
    CHECK(p.nu == std::vector<Int>{1, 4, 21, 2097174});
    CHECK(p.n == std::vector<Int>{2, 16, 2097152});
    CHECK(p.theta_partial == Rat(1179649, 2097152));
    CHECK(p.beta_bound_certified);

    RouhaniParameters p1 = rouhani_parameters(1);
    CHECK(p1.nu == std::vector<Int>{1, 4});
    CHECK(p1.theta_partial == Rat(1, 2));
    CHECK(p1.beta_bound_certified);

    RouhaniParameters p2 = rouhani_parameters(2);
    CHECK(p2.theta_partial == Rat(9, 16));  // 1/2 + 1/16
    CHECK(p2.beta_bound_certified);
}

TEST_CASE("depth 4 stays exactly representable", "[rouhani]") {
    RouhaniParameters p = rouhani_parameters(4, 2, 10);
    REQUIRE(p.nu.size() == 5);
    CHECK(p.nu[3] == 2097174);
    // nu_5 = 2^2097174 + 2097175 and n_4 = 2^2097174.
    CHECK(p.n[3] == Int(1) << 2097174);
    CHECK(p.nu[4] == (Int(1) << 2097174) + 2097175);
    CHECK(p.beta_bound_certified);
    // theta_4 refines theta_3 by exactly 2^{-nu_4}.
    RouhaniParameters p3 = rouhani_parameters(3, 2, 10);
    CHECK(p.theta_partial - p3.theta_partial == Rat(Int(1), Int(1) << 2097174));
}

TEST_CASE("unsupported depths are rejected with the reason", "[rouhani]") {
    CHECK_THROWS_AS(rouhani_parameters(0), std::invalid_argument);
    CHECK_THROWS_AS(rouhani_parameters(-2), std::invalid_argument);
    try {
        rouhani_parameters(5);
        FAIL("expected throw");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("not representable") != std::string::npos);
    }
}

TEST_CASE("derivative-series partials approach the closed-form limits monotonically",
          "[rouhani][series]") {
    RouhaniParameters p = rouhani_parameters(3);  // default orders 6, terms 60
    auto limits = oracle_series_limits(6);
    REQUIRE(p.derivative_partials.size() == 7);
    const Rat tol(1, 1000000);
    for (int m = 0; m <= 6; ++m) {
        const auto& partial = p.derivative_partials[m];
        REQUIRE(partial.size() == 60);
        // Strictly increasing, strictly below the limit.
        for (std::size_t j = 1; j < partial.size(); ++j) REQUIRE(partial[j] > partial[j - 1]);
        for (const Rat& s : partial) REQUIRE(s < Rat(limits[m]));
        // Within 1e-6 by term 60, exactly in rational arithmetic.
        INFO("order m=" << m);
        CHECK(Rat(limits[m]) - partial.back() < tol);
    }
}

TEST_CASE("first partial sums are exact", "[rouhani][series]") {
    auto ps = derivative_series_partials(2, 4);
    // m=0: 1/2, 3/4, 7/8, 15/16.
    CHECK(ps[0] == std::vector<Rat>{Rat(1, 2), Rat(3, 4), Rat(7, 8), Rat(15, 16)});
    // m=1: 1/2, 1, 11/8, 13/8... sum n/2^n: 1/2, 1/2+2/4=1, +3/8=11/8, +4/16=13/8.
    CHECK(ps[1] == std::vector<Rat>{Rat(1, 2), Rat(1), Rat(11, 8), Rat(13, 8)});
    // m=2: 1/2, 3/2, 21/8, 29/8.
    CHECK(ps[2] == std::vector<Rat>{Rat(1, 2), Rat(3, 2), Rat(21, 8), Rat(29, 8)});
    CHECK_THROWS_AS(derivative_series_partials(-1, 5), std::invalid_argument);
    CHECK_THROWS_AS(derivative_series_partials(2, 0), std::invalid_argument);
}

TEST_CASE("dyadic-sum certificate behaves on hand cases", "[rouhani][certificate]") {
    using elk::detail::dyadic_sum_at_most_one;
    CHECK(dyadic_sum_at_most_one({}));                 // empty sum = 0
    CHECK(dyadic_sum_at_most_one({Int(0)}));           // exactly 1
    CHECK(dyadic_sum_at_most_one({Int(1), Int(1)}));   // 1/2 + 1/2 = 1
    CHECK(dyadic_sum_at_most_one({Int(1), Int(2), Int(3)}));  // 7/8
    CHECK_FALSE(dyadic_sum_at_most_one({Int(0), Int(5)}));    // 1 + 1/32
    CHECK_FALSE(dyadic_sum_at_most_one({Int(0), Int(0)}));    // 2
    CHECK_FALSE(dyadic_sum_at_most_one({Int(-1)}));           // 2
    CHECK(dyadic_sum_at_most_one({Int(2), Int(2), Int(1)}));  // 1/4+1/4+1/2 = 1
    CHECK_FALSE(dyadic_sum_at_most_one({Int(2), Int(2), Int(1), Int(9)}));
}
