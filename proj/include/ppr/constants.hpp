#ifndef PPR_CONSTANTS_HPP
#define PPR_CONSTANTS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace ppr {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact constants ledger for a given power k:
///   epsilon = 1/(3(k+1))          (overridable)
///   a0 = 2 + 4/(epsilon (k+1))
///   a  = max{6k, a0}              (overridable, must stay >= a0 is not enforced)
///   c  = 4a/epsilon^2, b = 4ac, s = 2k, t = (64k)^{2k}
/// The defining identity 64k * t^{-1/s} = 1 holds exactly: (64k)^s == t.
struct PaperConstants {
    int k = 1;
    BigRat epsilon;
    BigRat a0;
    BigRat a;
    BigRat c;
    BigRat b;
    int s = 2;
    BigInt t;
    BigRat edge_probability_c;  // edge probability of the host sample is c/n

    std::string to_string() const;
};

PaperConstants paper_constants(int k, std::optional<BigRat> epsilon_override = std::nullopt,
                               std::optional<BigRat> a_override = std::nullopt);

/// Exact check of 64k * t^{-1/s} == 1, i.e. (64k)^s == t.
bool local_lemma_identity_holds(const PaperConstants& pc);

}  // namespace ppr

#endif
