#pragma once

#include <Eigen/Dense>

#include "vilenkin/group.hpp"

namespace vilenkin {

// r_k(x) = exp(2 pi i x_k / m_k).
Complex rademacher(int k, const GroupPoint& x, const Structure& vs);

// psi_n(x) = prod_k r_k(x)^{n_k}, evaluated with root-table lookups.
Complex character(Index n, const GroupPoint& x, const Structure& vs);

// psi_n on every depth-N cell, in cell-id order.
Eigen::VectorXcd character_values(Index n, const Structure& vs);

}  // namespace vilenkin
