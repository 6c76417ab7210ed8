#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string_view>
#include <vector>

namespace permeq {

using BigInt = boost::multiprecision::cpp_int;

// Closed forms and recurrences for every enumeration the results tables
// use.  Domains (smallest legal n) are noted per id.
enum class SequenceId {
    Catalan,              // n >= 0: (2n)! / (n! (n+1)!)
    Pow2,                 // n >= 1: 2^(n-1)
    FactorialShift,       // n >= 1: (n-1)!
    HalfFactorials,       // n >= 1: floor(n/2)! * ceil(n/2)!
    CentralBinomialShift, // n >= 1: C(n-1, floor((n-1)/2))
    P5bAdj,               // n >= 3: odd n=2k+1: (3/2)k(k+1)(2k-1)!
                          //         even n=2k: (3/2)k(k-1/3)(2k-2)! - (2k-3)!!
    Involutions,          // n >= 0: inv(n) = inv(n-1) + (n-1) inv(n-2)
    Fib,                  // n >= 1: a(n)=a(n-1)+a(n-2), a(1)=a(2)=1
    A000930,              // n >= 0: a(n)=a(n-1)+a(n-3), a(0)=a(1)=a(2)=1
    FibIverson,           // n >= 1: Fib(n+1) - [n even]
    TribA000213,          // n >= 0: a(n)=a(n-1)+a(n-2)+a(n-3), a(0)=a(1)=a(2)=1
    TribA000073Iverson,   // n >= 1: T(n+2) - [n even], T(0)=T(1)=0, T(2)=1
    DoubleFactorialOdd,   // odd n >= 1: n!! = 1*3*...*n  (also accepts n = -1 -> 1)
};

BigInt eval(SequenceId id, long n);

// Verifies the Catalan convolution recurrences tying the identity-class
// counts A_m = C(m-1, floor((m-1)/2)) together:
//   A_{2n+2} = sum_i c_i * A_{2(n-i)+1}          (O = E*C)
//   A_{2n+1} = sum_m b_m * c_{n-m}, b_0 = 1, b_m = A_{2m}   (E = (1+xO)*C)
// Returns false and sets *counterexample to the failing size otherwise.
bool gf_convolution_check(int max_n, int* counterexample = nullptr);

enum class TableKind { Classes, Identity };

// The published results-table sequence for a (preset row, mode column)
// cell, starting at n = 3.  Throws NoPublishedData for empty cells.
const std::vector<BigInt>& figure1_expected(std::string_view preset, std::string_view mode,
                                            TableKind kind);

// Formula comparand for a cell, when one of the proved closed forms
// covers it.
std::optional<BigInt> formula_value(std::string_view preset, std::string_view mode,
                                    TableKind kind, int n);

}  // namespace permeq
