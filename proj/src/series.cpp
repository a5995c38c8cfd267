#include "gfprime/series.hpp"

#include <string>

namespace gfprime {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
    if (a.order() != b.order()) {
        throw OrderMismatch(std::string(op) + ": order " + std::to_string(a.order()) + " vs " +
                            std::to_string(b.order()));
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("TruncatedSeries: at least one coefficient is required");
    }
}

TruncatedSeries TruncatedSeries::from_sequence(const IntSequence& f, std::size_t order) {
    f.require(order, "TruncatedSeries::from_sequence");
    std::vector<ExactRational> coeffs(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        coeffs[n] = f.at(n);
    }
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries TruncatedSeries::constant(const ExactRational& value, std::size_t order) {
    std::vector<ExactRational> coeffs(order + 1);
    coeffs[0] = value;
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "series_add");
    std::vector<ExactRational> out(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += b[i];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "series_sub");
    std::vector<ExactRational> out(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= b[i];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "series_mul");
    const std::size_t n = a.order();
    std::vector<ExactRational> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_derivative(const TruncatedSeries& a) {
    if (a.order() == 0) {
        return TruncatedSeries(std::size_t{0});
    }
    std::vector<ExactRational> out(a.order());
    for (std::size_t i = 1; i <= a.order(); ++i) {
        out[i - 1] = a[i] * ExactRational(static_cast<long>(i));
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_pad(const TruncatedSeries& a, std::size_t order) {
    if (order < a.order()) {
        throw OrderMismatch("series_pad: target order below current order");
    }
    std::vector<ExactRational> out(a.coeffs().begin(), a.coeffs().end());
    out.resize(order + 1);
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_truncate(const TruncatedSeries& a, std::size_t order) {
    if (order > a.order()) {
        throw OrderMismatch("series_truncate: target order above current order");
    }
    return TruncatedSeries(std::vector<ExactRational>(a.coeffs().begin(),
                                                      a.coeffs().begin() + order + 1));
}

std::vector<ExactInt> reciprocal_one_minus_coeffs(const IntSequence& f, std::size_t order) {
    f.require(order, "series_reciprocal_one_minus");
    std::vector<ExactInt> h(order + 1);
    h[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        ExactInt acc = 0;
        for (std::size_t m = 1; m <= n; ++m) {
            acc += f.at(m) * h[n - m];
        }
        h[n] = std::move(acc);
    }
    return h;
}

TruncatedSeries series_reciprocal_one_minus(const IntSequence& f, std::size_t order) {
    auto h = reciprocal_one_minus_coeffs(f, order);
    std::vector<ExactRational> coeffs(h.begin(), h.end());
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries series_log_inv_one_minus(const IntSequence& f, std::size_t order) {
    const auto h = reciprocal_one_minus_coeffs(f, order);
    std::vector<ExactRational> coeffs(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        ExactInt n_g = 0;
        for (std::size_t m = 1; m <= n; ++m) {
            n_g += f.at(m) * static_cast<unsigned long>(m) * h[n - m];
        }
        coeffs[n] = ExactRational(n_g, ExactInt(static_cast<unsigned long>(n)));
    }
    return TruncatedSeries(std::move(coeffs));
}

}  // namespace gfprime
