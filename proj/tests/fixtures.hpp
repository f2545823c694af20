#ifndef MULTSUB_TESTS_FIXTURES_HPP
#define MULTSUB_TESTS_FIXTURES_HPP

// Values frozen from tests/oracles/derive_fixtures.py (pure Python, no shared
// code with the library). Regenerate with: python3 tests/oracles/derive_fixtures.py

namespace fixtures {

// max over 2 <= p <= 13, 0 <= a <= 12 of sum_b p^{(a-b)b} / p^{floor(a/2) ceil(a/2)}
inline constexpr unsigned long kOddEvenKNum = 1359217665;
inline constexpr unsigned long kOddEvenKDen = 536870912;

// |log N_p(alpha) - (log p/4) sum a_j^2| / (alpha_1 log p), partitions of m <= 10, p <= 13.
// Worst case 2.7755248162914192 at alpha = (1^10), p = 2.
inline constexpr double kLogCountC = 2.7756;

// |sum_{p <= 1e7, p = 1 (q)} 1/p - loglog x / phi(q)| / (log q / phi(q)), q in {3,4,5,7,9}.
// Worst 0.6496834475090991 at q = 3.
inline constexpr double kMertensC = 0.65;

// |sum_{n <= 1e5} f_r(n) - H(r) 1e5| / 2^omega(r) over squarefull r.
// 0.25510204 over r <= 100, 0.37190083 over r <= 500.
inline constexpr double kGs07C = 0.372;

// X |(1/4) sum_{q <= X} Lambda(q)/phi(q)^2 - A0| over X in [1e2, 1e5]; worst 0.2714286.
inline constexpr double kInfiniteSumC = 0.272;

inline constexpr double kA0 = 0.3745163601;
inline constexpr double kA = 0.7210899504;
inline constexpr double kB = 0.0563438921;
inline constexpr double kC = 1.2967348310;
inline constexpr double kBPrinted = -0.0182738562;

inline constexpr double kD1e4 = 2.787353242522207;

// cov(g1, g2; 1e7) from a separate counting sieve for omega(p - 1).
// The normalized ratios sit at 2.29 (w0, w0) and 1.30..1.56 (wq, w0): lower
// order terms still dominate at loglog 1e7 = 2.78.
inline constexpr double kCov00 = 16.405923896330943;
inline constexpr double kCovQ0[] = {5.707344063683229, 3.0109281387997577, 2.504183582488556,
                                    1.5108233376737905};  // q = 2, 3, 4, 5

// scan_max at N = 100
inline constexpr unsigned kScanGArg = 80;
inline constexpr double kScanGValue = 3.9889840465642745;  // log 54
inline constexpr unsigned kScanIArg = 91;
inline constexpr double kScanIValue = 2.70805020110221;  // log 15

}  // namespace fixtures

#endif  // MULTSUB_TESTS_FIXTURES_HPP
