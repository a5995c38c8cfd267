#include "gfprime/exact.hpp"

namespace gfprime {

std::string to_string(const ExactInt& value) { return value.get_str(10); }

ExactRational::ExactRational(const ExactInt& num, const ExactInt& den) {
    if (den == 0) {
        throw std::domain_error("ExactRational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("ExactRational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

ExactRational ExactRational::operator-() const { return ExactRational(mpq_class(-value_)); }

std::string ExactRational::to_string() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const ExactRational& value) {
    return os << value.to_string();
}

}  // namespace gfprime
