#pragma once

// Exact elements of Z[xi_p], xi_p a primitive p-th root of unity, stored as
// integer vectors (n_0, ..., n_{p-1}) for sum n_j xi^j. The canonical form has
// n_{p-1} = 0, reached by subtracting n_{p-1} from every coordinate via
// 1 + xi + ... + xi^{p-1} = 0. Since {1, xi, ..., xi^{p-2}} is a Z-basis,
// canonical coordinate equality is equality of the represented numbers.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffspec {

class CycInt {
public:
    explicit CycInt(int order = 3) : v_(order, 0) {
        if (order < 2) throw std::invalid_argument("root order must be at least 2");
    }

    static CycInt zero(int order) { return CycInt(order); }

    static CycInt integer(int order, long long n) {
        CycInt z(order);
        z.v_[0] = n;
        return z;
    }

    static CycInt root_power(int order, long long k) {
        CycInt z(order);
        z.v_[((k % order) + order) % order] = 1;
        z.canonicalize();
        return z;
    }

    // sum of counts[j] * xi^j
    static CycInt from_histogram(const std::vector<long long>& counts) {
        CycInt z(static_cast<int>(counts.size()));
        z.v_ = counts;
        z.canonicalize();
        return z;
    }

    int order() const { return static_cast<int>(v_.size()); }
    const std::vector<long long>& coords() const { return v_; }
    long long coord(int j) const { return v_[j]; }

    bool is_zero() const {
        for (long long c : v_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t j = 1; j < v_.size(); ++j)
            if (v_[j] != 0) return false;
        return true;
    }

    long long rational_value() const {
        if (!is_rational()) throw std::domain_error("value is not a rational integer");
        return v_[0];
    }

    CycInt& operator+=(const CycInt& o) {
        check(o);
        for (size_t j = 0; j < v_.size(); ++j) v_[j] += o.v_[j];
        return *this;  // canonical + canonical stays canonical
    }

    CycInt& operator-=(const CycInt& o) {
        check(o);
        for (size_t j = 0; j < v_.size(); ++j) v_[j] -= o.v_[j];
        return *this;
    }

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }

    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        a.check(b);
        int p = a.order();
        CycInt r(p);
        for (int i = 0; i < p; ++i) {
            if (a.v_[i] == 0) continue;
            for (int j = 0; j < p; ++j) {
                if (b.v_[j] == 0) continue;
                int k = i + j;
                if (k >= p) k -= p;
                r.v_[k] += a.v_[i] * b.v_[j];
            }
        }
        r.canonicalize();
        return r;
    }

    CycInt operator-() const {
        CycInt r = *this;
        for (auto& c : r.v_) c = -c;
        return r;
    }

    CycInt scaled(long long k) const {
        CycInt r = *this;
        for (auto& c : r.v_) c *= k;
        return r;
    }

    // complex conjugate: xi^j -> xi^{-j}
    CycInt conj() const {
        int p = order();
        CycInt r(p);
        for (int j = 0; j < p; ++j) r.v_[(p - j) % p] += v_[j];
        r.canonicalize();
        return r;
    }

    // |z|^2 = z * conj(z); rational exactly when the squared modulus is
    CycInt norm_squared() const { return *this * conj(); }

    // sum of all Galois conjugates, always a rational integer:
    // Tr(z) = p*n_0 - sum_j n_j on canonical coordinates
    long long galois_trace() const {
        long long s = 0;
        for (long long c : v_) s += c;
        return static_cast<long long>(order()) * v_[0] - s;
    }

    friend bool operator==(const CycInt& a, const CycInt& b) { return a.v_ == b.v_; }
    friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }
    friend bool operator<(const CycInt& a, const CycInt& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.v_ < b.v_;
    }

    std::string to_string() const {
        if (is_rational()) return std::to_string(v_[0]);
        std::string s = "[";
        for (size_t j = 0; j + 1 < v_.size(); ++j) {
            if (j) s += ',';
            s += std::to_string(v_[j]);
        }
        s += ']';
        return s;
    }

private:
    std::vector<long long> v_;

    void check(const CycInt& o) const {
        if (order() != o.order()) throw std::invalid_argument("cyclotomic order mismatch");
    }

    void canonicalize() {
        long long last = v_.back();
        if (last == 0) return;
        for (auto& c : v_) c -= last;
    }
};

}  // namespace ffspec
