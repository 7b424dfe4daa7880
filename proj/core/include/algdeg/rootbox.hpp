#ifndef ALGDEG_ROOTBOX_HPP
#define ALGDEG_ROOTBOX_HPP

#include <optional>
#include <vector>

#include "algdeg/interval.hpp"
#include "algdeg/intpoly.hpp"

namespace algdeg {

/// Certified isolating boxes for every complex root of a squarefree p.
///
/// Each box holds exactly one root and has sides <= target_width. Real roots
/// get boxes with im = [0, 0]; nonreal roots come in mirrored pairs. The
/// list is sorted by (re.lo, im.lo).
std::vector<ComplexBox> isolate_all_roots(const IntPolynomial& p, const Dyadic& target_width);

/// Shrinks a box known to isolate one root of p down to target_width.
/// The box is checked first; PreconditionError if it does not hold exactly
/// one root. The result is a subset of the input box.
ComplexBox refine_root(const IntPolynomial& p, const ComplexBox& box, const Dyadic& target_width);

/// Number of distinct roots of p in the closed box, certified.
int count_roots_in_box(const IntPolynomial& p, const ComplexBox& box);

/// refine_root without the initial check. The caller guarantees that the
/// box came out of isolate_all_roots / refine_root for this p (or a subset
/// of such a box), and that p is squarefree.
ComplexBox refine_isolated(const IntPolynomial& p, const ComplexBox& box, const Dyadic& target_width);

/// One complex Krawczyk step on box x; nullopt when the derivative at the
/// centre vanishes numerically. If the result lies in the interior of x,
/// x contains exactly one root.
std::optional<ComplexBox> krawczyk(const IntPolynomial& p, const IntPolynomial& dp, const ComplexBox& x, long prec);

}  // namespace algdeg

#endif
