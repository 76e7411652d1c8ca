#include "qmass/rational.hpp"

namespace qmass {

BigInt pow_int(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rational pow_rational(const Rational& base, unsigned long exp) {
    Rational out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
    // powers of a canonical fraction stay coprime
    return out;
}

std::string rational_string(const Rational& q) {
    return q.get_str();
}

}  // namespace qmass
