#pragma once

#include <cstddef>

#include "qlift/bitmatrix.hpp"
#include "qlift/cover.hpp"
#include "qlift/css_code.hpp"
#include "qlift/presentation.hpp"
#include "qlift/tanner.hpp"
#include "qlift/zlift.hpp"

namespace qlift {

struct ClassicalCode {
  BitMatrix h;
  TannerGraph tanner;

  explicit ClassicalCode(BitMatrix matrix) : h(std::move(matrix)), tanner(tanner_graph(h)) {}
};

/// H_X = [H1 (x) I | I (x) H2^T], H_Z = [I (x) H2 | H1^T (x) I].
/// Qubits: (bit1, bit2) row-major, then (check1, check2) row-major.
/// X-checks are (check1, bit2), Z-checks are (bit1, check2).
CssCode hypergraph_product(const BitMatrix& h1, const BitMatrix& h2);

/// The same blocks over Z with the right block of H_Z negated.
ZLiftedCode hpc_naive_zlift(const BitMatrix& h1, const BitMatrix& h2);

/// L x L circulant with ones at (i, i) and (i, i+1 mod L); requires L >= 2.
BitMatrix repetition_check_matrix(std::size_t length);

enum class ProductMode { factor1, factor2, diagonal };

/// Voltages on tanner_graph(h).graph(): a shift by one on every non-tree edge
/// of its spanning forest, the identity elsewhere.
VoltageAssignment cyclic_voltages(const BitMatrix& h, std::size_t degree);

/// Product voltages on an HPC cone presentation before validation: horizontal
/// edges carry v1, vertical edges the inverse of v2, apex edges the transport
/// from the Z-check's base point; the result is gauge-normalized.
VoltageAssignment product_voltage_candidate(const LiftPresentation& p, const BitMatrix& h1, const BitMatrix& h2,
                                            const VoltageAssignment& v1, const VoltageAssignment& v2,
                                            ProductMode mode);

/// As above, but throws ErrorKind::validation when a relator is violated (as
/// happens when the factor images do not commute).
VoltageAssignment product_voltages(const LiftPresentation& p, const BitMatrix& h1, const BitMatrix& h2,
                                   const VoltageAssignment& v1, const VoltageAssignment& v2, ProductMode mode);

}  // namespace qlift
