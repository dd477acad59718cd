// Exact linear algebra: rref/kernel/solve over F_p and Q, deterministic
// pivoting, and the independent minor-expansion rank oracle.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "koszul/matrix.hpp"
#include "test_support.hpp"

using namespace koszul;

namespace {

// brute-force determinantal rank: largest k with a nonzero k x k minor
Scalar det_recursive(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    const Field& f = m.field();
    if (rows.empty()) return f.one();
    Scalar acc = f.zero();
    Scalar sign = f.one();
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < cols.size(); ++j) {
        std::vector<int> sub_cols;
        for (size_t k = 0; k < cols.size(); ++k)
            if (k != j) sub_cols.push_back(cols[k]);
        Scalar term = f.mul(m.get(rows[0], cols[j]), det_recursive(m, sub_rows, sub_cols));
        acc = f.add(acc, f.mul(sign, term));
        sign = f.neg(sign);
    }
    return acc;
}

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - (k - depth); ++i) {
            cur[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

int minor_rank_oracle(const Matrix& m) {
    const Field& f = m.field();
    int maxk = std::min(m.rows(), m.cols());
    for (int k = maxk; k >= 1; --k) {
        std::vector<std::vector<int>> rsets, csets;
        subsets_of_size(m.rows(), k, rsets);
        subsets_of_size(m.cols(), k, csets);
        for (const auto& rs : rsets)
            for (const auto& cs : csets)
                if (!f.is_zero(det_recursive(m, rs, cs))) return k;
    }
    return 0;
}

}  // namespace

TEST_CASE("rref identity and rank-1 examples") {
    Field f5 = Field::prime(5);
    auto id3 = Matrix::identity(f5, 3);
    auto rr = id3.rref();
    CHECK(rr.rank == 3);
    CHECK(rr.pivots == std::vector<int>{0, 1, 2});
    CHECK(rr.reduced == id3);

    auto m = Matrix::from_ints(f5, 2, 2, {1, 2, 2, 4});
    rr = m.rref();
    CHECK(rr.rank == 1);
    CHECK(rr.pivots == std::vector<int>{0});
    CHECK(rr.reduced.get(0, 1).r == 2);
    CHECK(rr.reduced.get(1, 0).r == 0);
    CHECK(rr.reduced.get(1, 1).r == 0);
}

TEST_CASE("rank equals minor-expansion oracle on random matrices") {
    Field f7 = Field::prime(7);
    TestRng rng(20240817);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix m = random_matrix(f7, 6, 4, rng);
        CHECK(m.rank() == minor_rank_oracle(m));
    }
}

TEST_CASE("kernel basis properties") {
    Field f5 = Field::prime(5);
    Matrix z(f5, 2, 3);
    Matrix k = z.kernel_basis();
    CHECK(k.cols() == 3);
    CHECK(k.is_identity());

    auto m = Matrix::from_ints(f5, 2, 2, {1, 2, 2, 4});
    k = m.kernel_basis();
    REQUIRE(k.cols() == 1);
    // spanned by (3,1): 1*3 + 2*1 = 5 = 0 mod 5; our normalization is (-2,1)=(3,1)
    CHECK(k.get(0, 0).r == 3);
    CHECK(k.get(1, 0).r == 1);

    TestRng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix r = random_matrix(f5, 5, 7, rng);
        Matrix kb = r.kernel_basis();
        CHECK((r * kb).is_zero());
        CHECK(kb.rank() == 7 - r.rank());
    }
}

TEST_CASE("solve: identity, inconsistent, and random consistent systems") {
    Field f5 = Field::prime(5);
    Matrix id = Matrix::identity(f5, 3);
    Matrix b = Matrix::from_ints(f5, 3, 1, {4, 0, 2});
    auto x = id.solve(b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    auto m = Matrix::from_ints(f5, 2, 2, {1, 2, 2, 4});
    Matrix bad = Matrix::from_ints(f5, 2, 1, {1, 3});
    CHECK(!m.solve(bad).has_value());

    Matrix wrong_shape(f5, 3, 1);
    CHECK_THROWS_AS(m.solve(wrong_shape), UsageError);

    TestRng rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix a = random_matrix(f5, 4, 6, rng);
        Matrix x0 = random_matrix(f5, 6, 2, rng);
        Matrix rhs = a * x0;
        auto sol = a.solve(rhs);
        REQUIRE(sol.has_value());
        CHECK(a * *sol == rhs);
    }
}

TEST_CASE("rational rref records invertible row operations") {
    Field q = Field::rationals();
    TestRng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m(q, 4, 5);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 5; ++j) m.set_int(i, j, rng.next_int(-9, 9));
        auto rr = m.rref(true);
        CHECK(rr.transform * m == rr.reduced);
        CHECK(rr.transform.inverse() * rr.reduced == m);
        // cross-check rank against F_32003 on the same integer matrix
        Field fp = Field::prime(32003);
        Matrix mp(fp, 4, 5);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 5; ++j) mp.set(i, j, fp.from_rational(m.get(i, j).q));
        CHECK(mp.rank() == rr.rank);
    }
}

TEST_CASE("field element parsing and rational reduction mod p") {
    Field f5 = Field::prime(5);
    CHECK(f5.parse("7").r == 2);
    CHECK(f5.parse("-1").r == 4);
    CHECK(f5.parse("1/2").r == 3);  // 2*3 = 6 = 1 mod 5
    CHECK_THROWS_AS(f5.parse("x"), UsageError);
    Field q = Field::rationals();
    CHECK(q.to_string(q.parse("-6/4")) == "-3/2");
}
