#pragma once

#include "qqg/greenring.hpp"
#include "qqg/homalg.hpp"

namespace qqg {

struct CrossCheckResult {
    std::string description;
    bool ok = false;
    std::string detail;  // decomposition found / mismatch data
};

// Compares from_label(A) * from_label(B) in the Green ring with the image
// of the engine's verified decomposition of A (x) B.  Both labels and every
// label in the engine's decomposition must be expressible.
CrossCheckResult cross_check_product(const Engine& eng, const GreenRing& ring,
                                     const IndecompLabel& A, const IndecompLabel& B);

// Class of Omega^{±s} V_1 derived constructively: tensor by Omega^{±1} V_1,
// peel projectives, identify the stable part against the constructed
// syzygy, and subtract the projective classes from z±^s.  The result is
// derived data, not a generator formula.
GreenElem derive_syzygy_class(const Engine& eng, const GreenRing& ring, int sign, int s);

}  // namespace qqg
