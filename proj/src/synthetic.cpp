#include "ghm/synthetic.hpp"

#include <memory>

#include "ghm/errors.hpp"

namespace ghm::synthetic {

void Params::validate() const {
    base.validate();
    if (connection.size() > static_cast<int>(base.alphas.size()))
        throw InvalidParamsError("synthetic: connection larger than the exponent list");
    for (int r = 0; r < connection.size(); ++r) {
        if (connection.at(r, r).is_zero())
            throw InvalidParamsError("synthetic: connection has zero diagonal");
        for (int k = r + 1; k < connection.size(); ++k)
            if (!connection.at(r, k).is_zero())
                throw InvalidParamsError("synthetic: connection not lower triangular");
    }
}

OrthoSystemSpec system(const Params& p) {
    p.validate();
    const int order = p.connection.size() - 1;

    OrthoSystemSpec base_sys = muntz::system(p.base);
    // dual core = base core * C^-1, dense through the supported order
    ExactMatrix core(order + 1);
    for (int r = 0; r <= order; ++r)
        for (int k = 0; k <= r; ++k) core.at(r, k) = base_sys.coeff_core(r, k);

    ExactMatrix c_inv(order + 1);
    {
        // forward substitution inverse of the lower-triangular connection
        const ExactMatrix& c = p.connection;
        for (int col = 0; col <= order; ++col) {
            c_inv.at(col, col) = c.at(col, col).inverse();
            for (int r = col + 1; r <= order; ++r) {
                ComplexRational s;
                for (int k = col; k < r; ++k) s += c.at(r, k) * c_inv.at(k, col);
                c_inv.at(r, col) = -(s / c.at(r, r));
            }
        }
    }
    auto dual = std::make_shared<ExactMatrix>(core * c_inv);
    auto conn = std::make_shared<ExactMatrix>(p.connection);

    OrthoSystemSpec sys;
    sys.coeff_core = base_sys.coeff_core;
    sys.scale_sq = base_sys.scale_sq;
    sys.same_basis = false;
    sys.dual_core = [dual](int n, int k) { return dual->at(n, k); };
    sys.connection = [conn](int n, int k) { return conn->at(n, k); };
    sys.max_order = order;
    return sys;
}

} // namespace ghm::synthetic
