#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace paraxial {

namespace detail {

/// In-place iterative radix-2 FFT. a.size() must be a power of two and the
/// caller supplies the twiddle table tw[k] = exp(-2*pi*i*k/n), k < n/2.
/// The inverse conjugates the twiddles and scales by 1/n.
inline void fft_pow2(std::vector<std::complex<double>>& a,
                     const std::vector<std::complex<double>>& tw, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t base = 0; base < n; base += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::complex<double> w = tw[k * stride];
        if (inverse) w = std::conj(w);
        const std::complex<double> u = a[base + k];
        const std::complex<double> v = a[base + k + len / 2] * w;
        a[base + k] = u + v;
        a[base + k + len / 2] = u - v;
      }
    }
  }
  if (inverse) {
    const double s = 1.0 / static_cast<double>(n);
    for (auto& z : a) z *= s;
  }
}

}  // namespace detail

/// Evaluates S_j = sum_{k<m} h_k exp(i*rate*j*k) for j < p.
///
/// The bilinear exponent factors through jk = (j^2 + k^2 - (j-k)^2)/2, turning
/// the sum into chirp multiplies around a linear convolution with the chirp
/// filter exp(-i*rate*q^2/2), carried by zero-padded FFTs of length
/// L = next power of two >= m + p - 1. This is an exact refactoring of the
/// direct sum (identical up to rounding), at cost O(L log L). The plan is
/// reusable: construction does the filter FFT once, apply() runs two FFTs.
class CztPlan {
 public:
  CztPlan(std::size_t input_size, std::size_t output_size, double rate)
      : m_(input_size), p_(output_size) {
    if (m_ == 0 || p_ == 0)
      throw std::invalid_argument("chirp transform sizes must be positive");
    const std::size_t need = m_ + p_ - 1;
    l_ = 1;
    while (l_ < need) l_ <<= 1;

    tw_.resize(l_ / 2);
    for (std::size_t k = 0; k < l_ / 2; ++k)
      tw_[k] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) /
                                   static_cast<double>(l_));

    auto chirp = [rate](std::size_t q) {
      const double qd = static_cast<double>(q);
      return std::polar(1.0, 0.5 * rate * qd * qd);
    };
    chirp_in_.resize(m_);
    for (std::size_t k = 0; k < m_; ++k) chirp_in_[k] = chirp(k);
    chirp_out_.resize(p_);
    for (std::size_t j = 0; j < p_; ++j) chirp_out_[j] = chirp(j);

    // circular layout of the filter exp(-i*rate*q^2/2) for q in (-m, p)
    std::vector<std::complex<double>> b(l_, 0.0);
    const std::size_t spread = std::max(m_, p_);
    for (std::size_t q = 0; q < spread; ++q) {
      const std::complex<double> c = std::conj(chirp(q));
      if (q < p_) b[q] = c;
      if (q > 0 && q < m_) b[l_ - q] = c;
    }
    detail::fft_pow2(b, tw_, false);
    filter_ = std::move(b);
  }

  std::size_t input_size() const noexcept { return m_; }
  std::size_t output_size() const noexcept { return p_; }

  std::vector<std::complex<double>> apply(std::span<const std::complex<double>> h) const {
    if (h.size() != m_)
      throw std::invalid_argument("chirp transform input size mismatch");
    std::vector<std::complex<double>> a(l_, 0.0);
    for (std::size_t k = 0; k < m_; ++k) a[k] = h[k] * chirp_in_[k];
    detail::fft_pow2(a, tw_, false);
    for (std::size_t i = 0; i < l_; ++i) a[i] *= filter_[i];
    detail::fft_pow2(a, tw_, true);
    std::vector<std::complex<double>> out(p_);
    for (std::size_t j = 0; j < p_; ++j) out[j] = a[j] * chirp_out_[j];
    return out;
  }

 private:
  std::size_t m_ = 0;
  std::size_t p_ = 0;
  std::size_t l_ = 0;
  std::vector<std::complex<double>> tw_;
  std::vector<std::complex<double>> chirp_in_;
  std::vector<std::complex<double>> chirp_out_;
  std::vector<std::complex<double>> filter_;
};

/// Evaluates F_j = sum_k h_k exp(i*sign*s_k*t_j) for uniform source nodes
/// s_k = s0 + k*ds and uniform target nodes t_j = t0 + j*dt (dt may be
/// negative or fractional relative to 2*pi/span — nothing ties the two grids).
/// Expanding s_k*t_j splits off two boundary phase ramps around a CztPlan core
/// with rate sign*ds*dt.
class FourierSumPlan {
 public:
  FourierSumPlan(std::size_t m, double s0, double ds, std::size_t p, double t0, double dt,
                 double sign)
      : czt_(m, p, sign * ds * dt) {
    pre_.resize(m);
    for (std::size_t k = 0; k < m; ++k)
      pre_[k] = std::polar(1.0, sign * ds * t0 * static_cast<double>(k));
    post_.resize(p);
    for (std::size_t j = 0; j < p; ++j)
      post_[j] = std::polar(1.0, sign * s0 * (t0 + static_cast<double>(j) * dt));
  }

  std::vector<std::complex<double>> apply(std::span<const std::complex<double>> h) const {
    if (h.size() != pre_.size())
      throw std::invalid_argument("oscillatory sum input size mismatch");
    std::vector<std::complex<double>> tmp(h.size());
    for (std::size_t k = 0; k < h.size(); ++k) tmp[k] = h[k] * pre_[k];
    auto out = czt_.apply(tmp);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] *= post_[j];
    return out;
  }

 private:
  CztPlan czt_;
  std::vector<std::complex<double>> pre_;
  std::vector<std::complex<double>> post_;
};

}  // namespace paraxial
