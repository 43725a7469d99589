#include "bft/transforms.hpp"

#include <bit>
#include <stdexcept>

namespace bft {

namespace {

int order_of(const Eigen::VectorXd& v) {
    const auto n = static_cast<std::uint64_t>(v.size());
    if (n == 0 || !std::has_single_bit(n))
        throw std::invalid_argument("powerset transform: length must be a power of two");
    return std::countr_zero(n);
}

}  // namespace

Eigen::VectorXd zeta_supersets(Eigen::VectorXd v) {
    const int n = order_of(v);
    for (int i = 0; i < n; ++i) {
        const Eigen::Index bit = Eigen::Index{1} << i;
        for (Eigen::Index a = 0; a < v.size(); ++a)
            if (!(a & bit)) v[a] += v[a | bit];
    }
    return v;
}

Eigen::VectorXd mobius_supersets(Eigen::VectorXd v) {
    const int n = order_of(v);
    for (int i = 0; i < n; ++i) {
        const Eigen::Index bit = Eigen::Index{1} << i;
        for (Eigen::Index a = 0; a < v.size(); ++a)
            if (!(a & bit)) v[a] -= v[a | bit];
    }
    return v;
}

Eigen::VectorXd zeta_subsets(Eigen::VectorXd v) {
    const int n = order_of(v);
    for (int i = 0; i < n; ++i) {
        const Eigen::Index bit = Eigen::Index{1} << i;
        for (Eigen::Index a = 0; a < v.size(); ++a)
            if (a & bit) v[a] += v[a ^ bit];
    }
    return v;
}

Eigen::VectorXd mobius_subsets(Eigen::VectorXd v) {
    const int n = order_of(v);
    for (int i = 0; i < n; ++i) {
        const Eigen::Index bit = Eigen::Index{1} << i;
        for (Eigen::Index a = 0; a < v.size(); ++a)
            if (a & bit) v[a] -= v[a ^ bit];
    }
    return v;
}

}  // namespace bft
