#include "glvar/shift.hpp"

#include <stdexcept>

#include "glvar/schur.hpp"

namespace glvar {

PartitionTuple shift_tuple(int n, const PartitionTuple& t) {
    if (n < 0)
        throw std::invalid_argument("shift_tuple: negative n");
    std::vector<Partition> out;
    for (const Partition& lam : t.entries()) {
        for (int d = 0; d <= lam.size(); ++d) {
            for (const Partition& nu : partitions_of(d)) {
                long long mult = 0;
                for (const Partition& mu : partitions_of(lam.size() - d)) {
                    long long c = lr_coefficient(lam, mu, nu);
                    if (c != 0)
                        mult += c * schur_dim(mu, n);
                }
                for (long long k = 0; k < mult; ++k)
                    out.push_back(nu);
            }
        }
    }
    return PartitionTuple(std::move(out));
}

PartitionTuple shift_complement(int n, const PartitionTuple& t) {
    return tuple_minus(shift_tuple(n, t), t);
}

} // namespace glvar
