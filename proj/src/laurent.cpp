#include "colsig/laurent.hpp"

#include "colsig/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

namespace colsig {

namespace {

void require_same_vars(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.num_vars() != b.num_vars()) {
        throw DimensionError("Laurent polynomials in " + std::to_string(a.num_vars()) + " and " +
                             std::to_string(b.num_vars()) + " variables");
    }
}

// Packs exponent vectors inside a bounding box into one integer; variable 0
// is the most significant digit so key order matches lexicographic order.
struct BoxPacking {
    Exponent lo;
    std::vector<long long> width;
    std::vector<long long> stride;
    long long size = 1;

    BoxPacking(Exponent lower, const Exponent& upper) : lo(std::move(lower)) {
        const std::size_t n = lo.size();
        width.resize(n);
        stride.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            width[i] = static_cast<long long>(upper[i]) - lo[i] + 1;
        }
        for (std::size_t i = n; i-- > 0;) {
            stride[i] = size;
            if (size > std::numeric_limits<long long>::max() / std::max<long long>(width[i], 1)) {
                size = std::numeric_limits<long long>::max();
                return;
            }
            size *= width[i];
        }
    }

    long long pack(const Exponent& e) const {
        long long key = 0;
        for (std::size_t i = 0; i < e.size(); ++i) key += (e[i] - lo[i]) * stride[i];
        return key;
    }

    Exponent unpack(long long key) const {
        Exponent e(lo.size());
        for (std::size_t i = 0; i < lo.size(); ++i) {
            e[i] = static_cast<int>(key / stride[i]) + lo[i];
            key %= stride[i];
        }
        return e;
    }
};

// Dense coefficient buffer over a box; used when the box is not much larger
// than the number of products.
LaurentPoly from_dense(int num_vars, const BoxPacking& box, std::vector<mpz_class>& dense) {
    LaurentPoly out(num_vars);
    for (long long key = 0; key < static_cast<long long>(dense.size()); ++key) {
        if (sgn(dense[key]) != 0) out.add_term(box.unpack(key), dense[key]);
    }
    return out;
}

}  // namespace

LaurentPoly::LaurentPoly(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 1) throw DimensionError("Laurent polynomial needs at least one variable");
}

LaurentPoly LaurentPoly::constant(int num_vars, const mpz_class& c) {
    LaurentPoly p(num_vars);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int num_vars, Exponent exps, const mpz_class& c) {
    if (static_cast<int>(exps.size()) != num_vars) throw DimensionError("exponent vector length mismatch");
    LaurentPoly p(num_vars);
    p.add_term(exps, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int num_vars, int index, int power) {
    if (index < 0 || index >= num_vars) throw DimensionError("variable index out of range");
    Exponent e(num_vars, 0);
    e[index] = power;
    return monomial(num_vars, std::move(e));
}

void LaurentPoly::add_term(const Exponent& exps, const mpz_class& c) {
    if (static_cast<int>(exps.size()) != num_vars_) throw DimensionError("exponent vector length mismatch");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

mpz_class LaurentPoly::coeff(const Exponent& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_vars(a, b);
    const int n = a.num_vars();
    if (a.is_zero() || b.is_zero()) return LaurentPoly(n);

    Exponent lo = a.min_exponents(), hi = a.max_exponents();
    const Exponent blo = b.min_exponents(), bhi = b.max_exponents();
    for (int i = 0; i < n; ++i) {
        lo[i] += blo[i];
        hi[i] += bhi[i];
    }
    const BoxPacking box(lo, hi);
    const long long products = static_cast<long long>(a.term_count()) * static_cast<long long>(b.term_count());
    if (box.size <= 8 * products + 4096) {
        std::vector<mpz_class> dense(static_cast<std::size_t>(box.size));
        const Exponent alo = a.min_exponents();
        auto offset_key = [&](const Exponent& e, const Exponent& base) {
            long long k = 0;
            for (int i = 0; i < n; ++i) k += (e[i] - base[i]) * box.stride[i];
            return k;
        };
        std::vector<long long> bkeys;
        bkeys.reserve(b.term_count());
        for (const auto& [e, c] : b.terms()) bkeys.push_back(offset_key(e, blo));
        for (const auto& [ea, ca] : a.terms()) {
            const long long k0 = offset_key(ea, alo);
            std::size_t idx = 0;
            for (const auto& [eb, cb] : b.terms()) {
                mpz_addmul(dense[k0 + bkeys[idx++]].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            }
        }
        return from_dense(n, box, dense);
    }

    LaurentPoly out(n);
    Exponent e(n);
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly out(a.num_vars());
    for (const auto& [e, c] : a.terms()) out.terms_.emplace_hint(out.terms_.end(), e, -c);
    return out;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const {
    LaurentPoly out(num_vars_);
    if (sgn(c) == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, v * c);
    return out;
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
    if (static_cast<int>(shift.size()) != num_vars_) throw DimensionError("shift length mismatch");
    LaurentPoly out(num_vars_);
    for (const auto& [e, c] : terms_) {
        Exponent s = e;
        for (int i = 0; i < num_vars_; ++i) s[i] += shift[i];
        out.terms_.emplace_hint(out.terms_.end(), std::move(s), c);
    }
    return out;
}

LaurentPoly LaurentPoly::inverted_variables() const {
    LaurentPoly out(num_vars_);
    for (const auto& [e, c] : terms_) {
        Exponent s = e;
        for (int& x : s) x = -x;
        out.terms_.emplace(std::move(s), c);
    }
    return out;
}

Exponent LaurentPoly::min_exponents() const {
    if (terms_.empty()) return Exponent(num_vars_, 0);
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < num_vars_; ++i) m[i] = std::min(m[i], e[i]);
    }
    return m;
}

Exponent LaurentPoly::max_exponents() const {
    if (terms_.empty()) return Exponent(num_vars_, 0);
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < num_vars_; ++i) m[i] = std::max(m[i], e[i]);
    }
    return m;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool constant_term = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        mpz_class mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (constant_term) {
            os << mag.get_str();
            continue;
        }
        bool need_star = false;
        if (mag != 1) {
            os << mag.get_str();
            need_star = true;
        }
        for (int i = 0; i < num_vars_; ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << "t" << (i + 1);
            if (e[i] != 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

mpz_class augment(const LaurentPoly& p) {
    mpz_class s = 0;
    for (const auto& [e, c] : p.terms()) s += c;
    return s;
}

bool is_in_U(const LaurentPoly& p) { return abs(augment(p)) == 1; }

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
    require_same_vars(num, den);
    if (den.is_zero()) throw DomainError("division by the zero polynomial");
    const int n = num.num_vars();
    if (num.is_zero()) return LaurentPoly(n);

    // The quotient's exponents are confined to [minN - minD, maxN - maxD].
    const Exponent nlo = num.min_exponents(), nhi = num.max_exponents();
    const Exponent dlo = den.min_exponents(), dhi = den.max_exponents();
    Exponent qlo(n), qhi(n);
    for (int i = 0; i < n; ++i) {
        qlo[i] = nlo[i] - dlo[i];
        qhi[i] = nhi[i] - dhi[i];
        if (qhi[i] < qlo[i]) throw DomainError("inexact Laurent division");
    }

    // Kronecker substitution into one variable. Keys are offsets from nlo
    // packed with the numerator's widths; q' = e_q - qlo and d' = e_d - dlo
    // satisfy q' + d' = e_num - nlo, so q * den has no carries.
    const BoxPacking box(nlo, nhi);
    if (box.size > (1LL << 26)) throw DomainError("Laurent division operands too spread out");
    const long long origin = box.pack(nlo);
    std::vector<mpz_class> rem(static_cast<std::size_t>(box.size));
    for (const auto& [e, c] : num.terms()) rem[box.pack(e) - origin] = c;

    std::vector<std::pair<long long, mpz_class>> dterms;
    long long dtop = -1;
    for (const auto& [e, c] : den.terms()) {
        Exponent s(n);
        for (int i = 0; i < n; ++i) s[i] = e[i] - dlo[i] + nlo[i];
        const long long k = box.pack(s) - origin;
        dterms.emplace_back(k, c);
        dtop = std::max(dtop, k);
    }
    mpz_class lead;
    for (const auto& [k, c] : dterms) {
        if (k == dtop) lead = c;
    }

    LaurentPoly out(n);
    mpz_class q;
    for (long long top = box.size - 1; top >= 0; --top) {
        if (sgn(rem[top]) == 0) continue;
        const long long qkey = top - dtop;
        if (qkey < 0 || !mpz_divisible_p(rem[top].get_mpz_t(), lead.get_mpz_t())) {
            throw DomainError("inexact Laurent division");
        }
        mpz_divexact(q.get_mpz_t(), rem[top].get_mpz_t(), lead.get_mpz_t());
        for (const auto& [k, c] : dterms) {
            mpz_submul(rem[qkey + k].get_mpz_t(), q.get_mpz_t(), c.get_mpz_t());
        }
        Exponent e = box.unpack(qkey + origin);
        for (int i = 0; i < n; ++i) {
            e[i] += qlo[i] - nlo[i];
            if (e[i] > qhi[i]) throw DomainError("inexact Laurent division");
        }
        out.add_term(e, q);
    }
    if (out * den != num) throw DomainError("inexact Laurent division");
    return out;
}

LaurentMatrix::LaurentMatrix(std::size_t rows, std::size_t cols, int num_vars)
    : rows_(rows), cols_(cols), num_vars_(num_vars), entries_(rows * cols, LaurentPoly(num_vars)) {}

LaurentMatrix LaurentMatrix::transposed() const {
    LaurentMatrix t(cols_, rows_, num_vars_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::size_t rank_over_fraction_field(const LaurentMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const int n = m.num_vars();
    if (rows == 0 || cols == 0) return 0;

    std::vector<std::vector<LaurentPoly>> a(rows, std::vector<LaurentPoly>(cols, LaurentPoly(n)));
    for (std::size_t i = 0; i < rows; ++i) {
        Exponent shift(n, std::numeric_limits<int>::max());
        bool any = false;
        for (std::size_t j = 0; j < cols; ++j) {
            if (m(i, j).is_zero()) continue;
            any = true;
            const Exponent lo = m(i, j).min_exponents();
            for (int v = 0; v < n; ++v) shift[v] = std::min(shift[v], lo[v]);
        }
        if (!any) continue;
        for (int& s : shift) s = -s;
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).shifted(shift);
    }

    std::size_t rank = 0;
    LaurentPoly prev = LaurentPoly::constant(n, 1);
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (a[r][c].is_zero()) continue;
            if (pivot == rows || a[r][c].term_count() < a[pivot][c].term_count()) pivot = r;
        }
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        const LaurentPoly& p = a[rank][c];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                LaurentPoly cross = p * a[i][j] - a[i][c] * a[rank][j];
                a[i][j] = exact_divide(cross, prev);
            }
            a[i][c] = LaurentPoly(n);
        }
        prev = p;
        ++rank;
    }
    return rank;
}

}  // namespace colsig
