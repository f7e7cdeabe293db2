#include "ppr/constants.hpp"

#include <sstream>
#include <stdexcept>

namespace ppr {

PaperConstants paper_constants(int k, std::optional<BigRat> epsilon_override,
                               std::optional<BigRat> a_override) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    PaperConstants pc;
    pc.k = k;
    pc.epsilon = epsilon_override ? *epsilon_override : BigRat(1, 3 * (k + 1));
    if (pc.epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
    pc.a0 = BigRat(2) + BigRat(4) / (pc.epsilon * (k + 1));
    if (a_override) {
        if (*a_override <= 0) throw std::invalid_argument("a must be positive");
        pc.a = *a_override;
    } else {
        pc.a = std::max(BigRat(6 * k), pc.a0);
    }
    pc.c = BigRat(4) * pc.a / (pc.epsilon * pc.epsilon);
    pc.b = BigRat(4) * pc.a * pc.c;
    pc.s = 2 * k;
    pc.t = boost::multiprecision::pow(BigInt(64 * k), static_cast<unsigned>(2 * k));
    pc.edge_probability_c = pc.c;
    return pc;
}

bool local_lemma_identity_holds(const PaperConstants& pc) {
    return boost::multiprecision::pow(BigInt(64 * pc.k), static_cast<unsigned>(pc.s)) == pc.t;
}

std::string PaperConstants::to_string() const {
    std::ostringstream os;
    os << "constants k=" << k << "\n"
       << "epsilon " << epsilon << "\n"
       << "a0 " << a0 << "\n"
       << "a " << a << "\n"
       << "c " << c << "\n"
       << "b " << b << "\n"
       << "s " << s << "\n"
       << "t " << t << "\n"
       << "edge_probability c/n with c=" << edge_probability_c << "\n";
    return os.str();
}

}  // namespace ppr
