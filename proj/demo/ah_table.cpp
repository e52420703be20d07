// Prints secant dimensions of Veronese varieties next to Terracini sampling,
// marking the defective entries.

#include <cstdio>

#include <ranklab/ranklab.hpp>

using namespace ranklab;

int main(int argc, char** argv)
{
    const int n_max = argc > 1 ? std::atoi(argv[1]) : 4;
    const int d_max = argc > 2 ? std::atoi(argv[2]) : 4;
    const ExceptionTable table =
        load_exception_table(std::filesystem::path(RANKLAB_DEFAULT_DATA_DIR) / "exceptions.json");

    std::printf("%3s %3s %4s %5s %9s %7s %8s\n", "n", "d", "s", "N", "expected", "actual", "sampled");
    for (int n = 1; n <= n_max; ++n)
        for (int d = 2; d <= d_max; ++d) {
            const Veronese v{n, d};
            for (int s = 1;; ++s) {
                const SecantRecord r = actual_dim(v, s, table);
                const std::int64_t t = terracini_dim(v, s);
                std::printf("%3d %3d %4d %5lld %9lld %7lld %8lld%s\n", n, d, s, static_cast<long long>(r.N),
                            static_cast<long long>(r.expected_dim), static_cast<long long>(r.actual_dim),
                            static_cast<long long>(t), r.defect > 0 ? "  defective" : "");
                if (r.actual_dim == r.N)
                    break;
            }
        }
    return 0;
}
