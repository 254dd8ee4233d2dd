#ifndef COSK_VERSION_HPP
#define COSK_VERSION_HPP

#include <cstdint>

namespace cosk {

inline constexpr const char* kToolName = "cosk";
inline constexpr const char* kToolVersion = "0.1.0";

// Convention ledger. Reports embed these so that cross-version diffs of
// numerical output can be traced to convention changes.
//
//   * Orthonormal frame throughout; R_{1212} = +1 on the unit round sphere,
//     equivalently sec(e_i,e_j) = R_{ijij}.
//   * ric_{jk} = sum_i R_{ijik}, so the unit sphere has ric = (n-1) g.
//   * Second-kind operator of the unit sphere is the identity.
//   * First-kind operator of the unit sphere is 2*Id in the orthonormal
//     basis (e^i o e^j - e^j o e^i)/sqrt(2), i < j.
//   * Basis p-form monomials e^{i1} ^ ... ^ e^{ip} (increasing indices) are
//     orthonormal.
//   * With these choices the Weitzenboeck calibration constant is 1.
inline constexpr int kConventionsVersion = 1;
inline constexpr double kSphereR1212 = 1.0;
inline constexpr double kSphereSecondKindEigenvalue = 1.0;
inline constexpr double kSphereFirstKindEigenvalue = 2.0;

inline constexpr std::uint64_t kDefaultSeed = 42;

}  // namespace cosk

#endif
