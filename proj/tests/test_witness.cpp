#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <ranklab/witness.hpp>

#include "oracles.hpp"

using namespace ranklab;

namespace {

std::vector<Rational> R(std::initializer_list<long> xs)
{
    std::vector<Rational> v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

/// Oracle: expand f(sP+tQ) by evaluating at d+1 points t/s = 0..d and solving
/// the Vandermonde system with Gauss-Jordan.
std::vector<Rational> interpolated_coeffs(const MultiPoly& f, const Vector& P, const Vector& Q)
{
    const unsigned d = *f.degree();
    oracle::Rows sys;
    for (unsigned j = 0; j <= d; ++j) {
        const Rational tau(j);
        std::vector<Rational> row;
        Rational pw = 1;
        for (unsigned i = 0; i <= d; ++i) {
            row.push_back(pw);
            pw *= tau;
        }
        row.push_back(f.eval(P + tau * Q));
        sys.push_back(row);
    }
    // Gauss-Jordan on the augmented system
    for (unsigned c = 0; c <= d; ++c) {
        unsigned p = c;
        while (sys[p][c].is_zero())
            ++p;
        std::swap(sys[p], sys[c]);
        const Rational piv = sys[c][c];
        for (auto& x : sys[c])
            x /= piv;
        for (unsigned r = 0; r <= d; ++r)
            if (r != c && !sys[r][c].is_zero()) {
                const Rational m = sys[r][c];
                for (unsigned k = 0; k <= d + 1; ++k)
                    sys[r][k] -= m * sys[c][k];
            }
    }
    std::vector<Rational> out;
    for (unsigned i = 0; i <= d; ++i)
        out.push_back(sys[i][d + 1]);
    return out;
}

const Vector P_diag = make_vector({1, 0, 0, 0, 1, 0, 0, 0, -2});
const Vector Q_flag = make_vector({1, 0, -1, 0, 0, 0, 1, 0, -1});

} // namespace

TEST_CASE("restrict_to_line examples")
{
    // f = x0^3 on three variables
    const MultiPoly x0 = MultiPoly::variable(3, 0);
    const auto lr = restrict_to_line(x0 * x0 * x0, make_vector({1, 0, 0}), make_vector({0, 1, 0}));
    CHECK(lr.coeffs == R({1, 0, 0, 0}));

    const MultiPoly det = known_hypersurface_equation(FlagAdjoint3{}, 2);
    CHECK(restrict_to_line(det, P_diag, Q_flag).coeffs == R({-2, -3, 0, 0}));

    const MultiPoly klein = known_hypersurface_equation(Grassmann{2, 4}, 1);
    const Vector P = make_vector({1, 0, 0, 0, 0, 1});  // e1^e2 + e3^e4
    const Vector Q = make_vector({0, 1, 0, 0, 0, 0});  // e1^e3
    CHECK(restrict_to_line(klein, P, Q).coeffs == R({1, 0, 0}));

    CHECK_THROWS_AS(restrict_to_line(det, P_diag, Rational(3) * P_diag), Error);
    CHECK_THROWS_AS(restrict_to_line(det, P_diag, make_vector({1, 2})), Error);
}

TEST_CASE("restriction endpoints and interpolation oracle")
{
    Rng rng(2);
    for (const auto& [v, s] : std::vector<std::pair<VarietyFamily, int>>{
             {FlagAdjoint3{}, 2}, {Grassmann{2, 4}, 1}, {Veronese{2, 2}, 2}}) {
        const MultiPoly f = known_hypersurface_equation(v, s);
        for (int i = 0; i < 30; ++i) {
            const Vector P = random_int_vector(rng, coord_len(v), 9);
            const Vector Q = random_int_vector(rng, coord_len(v), 9);
            if (proportional(P, Q))
                continue;
            const auto lr = restrict_to_line(f, P, Q);
            CHECK(lr.coeffs.front() == f.eval(P));
            CHECK(lr.coeffs.back() == f.eval(Q));
            CHECK(lr.coeffs == interpolated_coeffs(f, P, Q));
        }
    }
}

TEST_CASE("secondary intersections")
{
    const auto roots = secondary_intersections({R({-2, -3, 0, 0})});
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].exact);
    CHECK(roots[0].t / roots[0].s == Rational(-2, 3));
    CHECK(roots[0].multiplicity == 1);
    CHECK(roots[0].s == 3);

    try {
        secondary_intersections({R({1, 0, 0})});
        FAIL("expected NoSecondaryIntersection");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoSecondaryIntersection);
    }

    const auto lin = secondary_intersections({R({1, 1})});
    REQUIRE(lin.size() == 1);
    CHECK(lin[0].s == 1);
    CHECK(lin[0].t == -1);

    CHECK_THROWS_AS(secondary_intersections({R({0, 1})}), Error);
}

TEST_CASE("secondary intersections: repeated, irrational and complex roots")
{
    // (1 + tau)^2 (2 - tau): double root -1, simple root 2
    const auto r = secondary_intersections({R({2, 3, 0, -1})});
    REQUIRE(r.size() == 2);
    CHECK(r[0].exact);
    unsigned total = 0;
    for (const auto& x : r)
        total += x.multiplicity;
    CHECK(total == 3);

    // 2 - tau^2: irrational roots +-sqrt 2, numeric
    const auto irr = secondary_intersections({R({2, 0, -1})});
    REQUIRE(irr.size() == 2);
    for (const auto& x : irr) {
        CHECK_FALSE(x.exact);
        CHECK(std::abs(std::abs(x.tau_num) - std::sqrt(2.0)) < 1e-12);
    }

    // tau^3 - 2: one real cube root
    const auto cub = secondary_intersections({R({-2, 0, 0, 1})});
    REQUIRE(cub.size() == 1);
    CHECK(std::abs(cub[0].tau_num - std::cbrt(2.0)) < 1e-12);

    // 1 + tau^2: no real roots
    CHECK_THROWS_AS(secondary_intersections({R({1, 0, 1})}), Error);
}

TEST_CASE("worked flag example")
{
    const MultiPoly det = known_hypersurface_equation(FlagAdjoint3{}, 2);
    const auto roots = secondary_intersections(restrict_to_line(det, P_diag, Q_flag));
    const Vector Rv = roots[0].s * P_diag + roots[0].t * Q_flag;
    CHECK(Rv == make_vector({1, 0, 2, 0, 3, 0, -2, 0, -4}));
    CHECK(det.eval(Rv) == 0);
    CHECK(rank_exact(as_matrix3(Rv)) == 2);
    CHECK(Rational(1, 3) * (Rv + Rational(2) * Q_flag) == P_diag);

    const WitnessDecomposition w = rank_witness(witness_target("flag"), P_diag, 0, 25);
    CHECK(w.exact);
    CHECK(w.rank_bound == 3);
    CHECK(verify_witness(FlagAdjoint3{}, det, w));
    CHECK(w.alpha * w.Q + w.beta * w.R == P_diag);
}

TEST_CASE("Klein quadric example")
{
    const MultiPoly klein = known_hypersurface_equation(Grassmann{2, 4}, 1);
    const Vector P = make_vector({1, 0, 0, 0, 0, 1});
    const Vector Q = make_vector({1, 0, 0, 0, 0, 0});
    const auto lr = restrict_to_line(klein, P, Q);
    CHECK(lr.coeffs == R({1, 1, 0}));
    const auto roots = secondary_intersections(lr);
    const Vector Rv = roots[0].s * P + roots[0].t * Q;
    CHECK(Rv == make_vector({0, 0, 0, 0, 0, 1})); // e3^e4
    CHECK(rank_witness(witness_target("klein"), P, 0, 25).rank_bound == 2);
}

TEST_CASE("random flag points: rank bound at most 3")
{
    Rng rng(11);
    const WitnessTarget target = witness_target("flag");
    const MultiPoly f = known_hypersurface_equation(target.variety, target.s_hyp);
    for (int i = 0; i < 100; ++i) {
        const Vector P = random_off_hypersurface(target, rng, 20);
        CHECK(trace3(P) == 0);
        const WitnessDecomposition w = rank_witness(target, P, static_cast<std::uint64_t>(i), 25);
        CHECK(w.rank_bound <= 3);
        CHECK(verify_witness(target.variety, f, w));
        CHECK(trace3(w.R) == 0);
    }
}

TEST_CASE("random points off the Klein quadric: rank bound 2")
{
    Rng rng(13);
    const WitnessTarget target = witness_target("klein");
    const MultiPoly f = known_hypersurface_equation(target.variety, target.s_hyp);
    for (int i = 0; i < 100; ++i) {
        const Vector P = random_off_hypersurface(target, rng, 20);
        const WitnessDecomposition w = rank_witness(target, P, static_cast<std::uint64_t>(i), 25);
        CHECK(w.rank_bound == 2);
        CHECK(verify_witness(target.variety, f, w));
        CHECK(on_witness_variety(target.variety, w.R));
    }
}

TEST_CASE("ternary quadrics: rank bound 3")
{
    Rng rng(15);
    const WitnessTarget target = witness_target("sym2");
    for (int i = 0; i < 30; ++i) {
        const Vector P = random_off_hypersurface(target, rng, 20);
        const WitnessDecomposition w = rank_witness(target, P, static_cast<std::uint64_t>(i), 25);
        CHECK(w.rank_bound == 3);
        CHECK(rank_exact(sym2_matrix(w.R)) <= 2);
    }
}

TEST_CASE("witness scaling invariance")
{
    Rng rng(17);
    for (const char* name : {"flag", "klein", "sym2"}) {
        const WitnessTarget target = witness_target(name);
        for (int i = 0; i < 10; ++i) {
            const Vector P = random_off_hypersurface(target, rng, 20);
            const Rational lam = random_nonzero_rational(rng, 9, 5);
            const auto a = rank_witness(target, P, 5, 25);
            const auto b = rank_witness(target, lam * P, 5, 25);
            CHECK(a.rank_bound == b.rank_bound);
            CHECK(b.alpha == lam * a.alpha);
        }
    }
}

TEST_CASE("witness errors")
{
    const WitnessTarget flag = witness_target("flag");
    try {
        rank_witness(flag, Q_flag, 0, 5);
        FAIL("expected PrecondViolated");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PrecondViolated);
    }
    CHECK_THROWS_AS(witness_target("torus"), Error);
    CHECK_THROWS_AS(rank_witness(flag, make_vector({1, 2, 3}), 0, 5), Error);
    CHECK(rank_witness(flag, P_diag, 0, 1).tries == 1);
}

TEST_CASE("the s^{d-1}t coefficient obstruction check")
{
    const MultiPoly det = known_hypersurface_equation(FlagAdjoint3{}, 2);
    CHECK(check_eqbella_obstruction(FlagAdjoint3{}, det, P_diag, 50, 0));

    const MultiPoly klein = known_hypersurface_equation(Grassmann{2, 4}, 1);
    CHECK(check_eqbella_obstruction(Grassmann{2, 4}, klein, make_vector({1, 0, 0, 0, 0, 1}), 50, 0));

    // (trace)^3 at the identity: the linear coefficient is 27 trace(Q) = 0 on X
    MultiPoly tr(9);
    for (std::size_t i : {0u, 4u, 8u})
        tr += MultiPoly::variable(9, i);
    const MultiPoly cube = tr * tr * tr;
    CHECK_FALSE(check_eqbella_obstruction(FlagAdjoint3{}, cube, make_vector({1, 0, 0, 0, 1, 0, 0, 0, 1}), 50, 0));
}

TEST_CASE("point files")
{
    std::istringstream in("1 0 0\n0 1/2 0\n0 0 -3/2\n");
    const Vector p = parse_point(in, 9);
    CHECK(p[4] == Rational(1, 2));
    std::istringstream shortp("1 2 3");
    CHECK_THROWS_AS(parse_point(shortp, 9), Error);
    std::istringstream bad("1 x 3");
    CHECK_THROWS_AS(parse_point(bad, 3), Error);
    CHECK_THROWS_AS(read_point_file("/nonexistent/point.txt", 9), Error);
}
