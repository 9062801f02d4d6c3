// SPDX-License-Identifier: Apache-2.0
//
// secout - outage and secrecy outage analysis for fading wireless channels
// Copyright (C) 2026 the secout authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SECOUT_SIGNED_LOG_HPP
#define SECOUT_SIGNED_LOG_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

namespace secout {

/**
 * Number stored as sign * exp(log_magnitude).
 *
 * Survives products of factorials and powers (gamma_bar^n * n! for n up to
 * the derivative-order cap) that overflow a plain double. Zero is sign == 0
 * with log magnitude -inf.
 */
class SignedLog {
  public:
    SignedLog() = default;

    static SignedLog zero() { return SignedLog(); }
    static SignedLog one() { return from_log(0.0); }

    static SignedLog from_value(double v) {
        if (v == 0.0)
            return SignedLog();
        SignedLog r;
        r.sign_ = v > 0.0 ? 1 : -1;
        r.log_ = std::log(std::fabs(v));
        return r;
    }

    /// Positive value exp(log_mag).
    static SignedLog from_log(double log_mag) {
        SignedLog r;
        if (log_mag == -std::numeric_limits<double>::infinity())
            return r;
        r.sign_ = 1;
        r.log_ = log_mag;
        return r;
    }

    static SignedLog from_log(int sign, double log_mag) {
        if (sign == 0 || log_mag == -std::numeric_limits<double>::infinity())
            return SignedLog();
        SignedLog r;
        r.sign_ = sign > 0 ? 1 : -1;
        r.log_ = log_mag;
        return r;
    }

    int sign() const { return sign_; }
    double log_magnitude() const { return log_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }

    /// Plain double value; throws if the magnitude exceeds double range.
    /// Values below the representable range quietly flush toward zero.
    double value() const {
        if (sign_ == 0)
            return 0.0;
        if (log_ > max_finite_log())
            throw std::overflow_error("SignedLog: magnitude exceeds double range");
        return static_cast<double>(sign_) * std::exp(log_);
    }

    bool representable() const { return sign_ == 0 || log_ <= max_finite_log(); }

    static double max_finite_log() { return 709.782712893383996; } // log(DBL_MAX)

    friend SignedLog operator*(const SignedLog &a, const SignedLog &b) {
        if (a.sign_ == 0 || b.sign_ == 0)
            return SignedLog();
        return from_log(a.sign_ * b.sign_, a.log_ + b.log_);
    }

    friend SignedLog operator/(const SignedLog &a, const SignedLog &b) {
        if (b.sign_ == 0)
            throw std::domain_error("SignedLog: division by zero");
        if (a.sign_ == 0)
            return SignedLog();
        return from_log(a.sign_ * b.sign_, a.log_ - b.log_);
    }

    friend SignedLog operator+(const SignedLog &a, const SignedLog &b) {
        if (a.sign_ == 0)
            return b;
        if (b.sign_ == 0)
            return a;
        if (a.sign_ == b.sign_)
            return from_log(a.sign_, log_add(a.log_, b.log_));
        if (a.log_ == b.log_)
            return SignedLog();
        return a.log_ > b.log_ ? from_log(a.sign_, log_sub(a.log_, b.log_))
                               : from_log(b.sign_, log_sub(b.log_, a.log_));
    }

    friend SignedLog operator-(const SignedLog &a, const SignedLog &b) { return a + (-b); }

    SignedLog operator-() const { return from_log(-sign_, log_); }

    SignedLog &operator+=(const SignedLog &o) { return *this = *this + o; }
    SignedLog &operator*=(const SignedLog &o) { return *this = *this * o; }

  private:
    // log(e^x + e^y) and log(e^x - e^y), x >= y strictly for the latter
    static double log_add(double x, double y) {
        if (x < y)
            std::swap(x, y);
        return x + std::log1p(std::exp(y - x));
    }
    static double log_sub(double x, double y) { return x + std::log1p(-std::exp(y - x)); }

    double log_ = -std::numeric_limits<double>::infinity();
    int sign_ = 0;
};

} // namespace secout

#endif // SECOUT_SIGNED_LOG_HPP
