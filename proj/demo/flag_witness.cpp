// Walks through a rank-3 witness for a traceless 3x3 matrix: the line from P
// through a flag point meets the determinant hypersurface again at R, and R
// splits into two flag points.

#include <iostream>

#include <ranklab/ranklab.hpp>

using namespace ranklab;

namespace {

void print_matrix(const char* name, const Vector& m)
{
    std::cout << name << " =\n";
    for (int i = 0; i < 3; ++i) {
        std::cout << "  ";
        for (int j = 0; j < 3; ++j)
            std::cout << m[3 * i + j] << (j < 2 ? "\t" : "\n");
    }
}

} // namespace

int main()
{
    const Vector P = make_vector({1, 0, 0, 0, 1, 0, 0, 0, -2});
    const Vector Q = make_vector({1, 0, -1, 0, 0, 0, 1, 0, -1});
    const MultiPoly det = known_hypersurface_equation(FlagAdjoint3{}, 2);

    print_matrix("P", P);
    print_matrix("Q (a flag point)", Q);
    std::cout << "det(P) = " << det.eval(P) << "\n";

    const LineRestriction lr = restrict_to_line(det, P, Q);
    std::cout << "det(sP + tQ) coefficients of s^3, s^2 t, s t^2, t^3: " << to_string(lr.coeffs) << "\n";

    const auto roots = secondary_intersections(lr);
    const Vector R = roots[0].s * P + roots[0].t * Q;
    std::cout << "second intersection [s:t] = [" << roots[0].s << ":" << roots[0].t << "]\n";
    print_matrix("R", R);
    std::cout << "rank R = " << rank_exact(as_matrix3(R)) << ", so R is a sum of two flag points\n";

    const WitnessDecomposition w = rank_witness(witness_target("flag"), P, 0, 25);
    std::cout << "\nrandom-line witness: " << w.tries << " tries, rank bound " << w.rank_bound << ", verified "
              << std::boolalpha << verify_witness(FlagAdjoint3{}, det, w) << "\n";
    return 0;
}
