#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace stw {

// Integer-coefficient power series truncated at a working degree. Negative
// degrees are allowed (the S^{-1} homology slot); coefficients beyond the
// truncation degree are unknown, and arithmetic keeps them unknown.
struct PoincareSeries {
    int trunc = 0;                 // coefficients valid for degrees <= trunc
    std::map<int, long long> c;    // nonzero coefficients only

    PoincareSeries() = default;
    explicit PoincareSeries(int truncation) : trunc(truncation) {}

    static PoincareSeries monomial(int degree, long long coeff, int truncation) {
        PoincareSeries s(truncation);
        if (coeff != 0 && degree <= truncation) s.c[degree] = coeff;
        return s;
    }
    static PoincareSeries one(int truncation) { return monomial(0, 1, truncation); }
    static PoincareSeries zero(int truncation) { return PoincareSeries(truncation); }

    long long coeff(int d) const {
        if (d > trunc) throw std::out_of_range("PoincareSeries: beyond truncation degree");
        auto it = c.find(d);
        return it == c.end() ? 0 : it->second;
    }

    void set(int d, long long v) {
        if (d > trunc) return;
        if (v == 0) c.erase(d);
        else c[d] = v;
    }

    PoincareSeries shifted(int by) const {
        PoincareSeries out(trunc);
        for (auto& [d, v] : c)
            if (d + by <= trunc) out.c[d + by] = v;
        // shifting down loses nothing; shifting up may push known range past
        // trunc, which is fine (we only ever report up to trunc)
        return out;
    }

    friend PoincareSeries operator+(const PoincareSeries& a, const PoincareSeries& b) {
        PoincareSeries out(std::min(a.trunc, b.trunc));
        for (auto& [d, v] : a.c)
            if (d <= out.trunc) out.c[d] += v;
        for (auto& [d, v] : b.c)
            if (d <= out.trunc) out.c[d] += v;
        for (auto it = out.c.begin(); it != out.c.end();)
            it = it->second == 0 ? out.c.erase(it) : std::next(it);
        return out;
    }

    friend PoincareSeries operator*(const PoincareSeries& a, const PoincareSeries& b) {
        PoincareSeries out(std::min(a.trunc, b.trunc));
        for (auto& [d1, v1] : a.c)
            for (auto& [d2, v2] : b.c)
                if (d1 + d2 <= out.trunc) out.c[d1 + d2] += v1 * v2;
        for (auto it = out.c.begin(); it != out.c.end();)
            it = it->second == 0 ? out.c.erase(it) : std::next(it);
        return out;
    }

    // equality of known coefficients up to the common truncation
    friend bool operator==(const PoincareSeries& a, const PoincareSeries& b) {
        int t = std::min(a.trunc, b.trunc);
        for (int d = std::min(a.c.empty() ? 0 : a.c.begin()->first, b.c.empty() ? 0 : b.c.begin()->first);
             d <= t; ++d) {
            long long va = 0, vb = 0;
            auto ia = a.c.find(d);
            if (ia != a.c.end()) va = ia->second;
            auto ib = b.c.find(d);
            if (ib != b.c.end()) vb = ib->second;
            if (va != vb) return false;
        }
        return true;
    }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (int d = 0; d <= trunc; ++d) {
            if (d) os << ",";
            os << coeff(d);
        }
        os << ")";
        return os.str();
    }
};

} // namespace stw
