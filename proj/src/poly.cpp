#include "katabol/poly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

#include "katabol/errors.hpp"

namespace katabol {

void BivariatePoly::add_term(const Integer& c, int qe, int te) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({qe, te}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer BivariatePoly::coeff(int qe, int te) const {
    auto it = terms_.find({qe, te});
    return it == terms_.end() ? Integer(0) : it->second;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    for (const auto& [key, c] : o.terms_) add_term(c, key.first, key.second);
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
    for (const auto& [key, c] : o.terms_) add_term(-c, key.first, key.second);
    return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
    return out;
}

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& o) {
    *this = *this * o;
    return *this;
}

BivariatePoly BivariatePoly::operator-() const {
    BivariatePoly out;
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
    return out;
}

BivariatePoly BivariatePoly::shifted(int dq, int dt) const {
    BivariatePoly out;
    for (const auto& [key, c] : terms_)
        out.terms_.emplace(Key{key.first + dq, key.second + dt}, c);
    return out;
}

bool BivariatePoly::is_polynomial() const {
    for (const auto& [key, c] : terms_)
        if (key.first < 0 || key.second < 0) return false;
    return true;
}

bool BivariatePoly::coefficients_nonnegative() const {
    for (const auto& [key, c] : terms_)
        if (c < 0) return false;
    return true;
}

int BivariatePoly::min_q_exponent() const {
    int m = 0;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (first || key.first < m) m = key.first;
        first = false;
    }
    return m;
}

int BivariatePoly::max_q_exponent() const {
    int m = 0;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (first || key.first > m) m = key.first;
        first = false;
    }
    return m;
}

int BivariatePoly::min_t_exponent() const {
    int m = 0;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (first || key.second < m) m = key.second;
        first = false;
    }
    return m;
}

int BivariatePoly::max_t_exponent() const {
    int m = 0;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (first || key.second > m) m = key.second;
        first = false;
    }
    return m;
}

namespace {
Integer int_pow(const Integer& base, int e) {
    if (e < 0) throw arithmetic_error("cannot specialize a Laurent term at an integer");
    Integer out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}
}  // namespace

BivariatePoly BivariatePoly::specialize_q(const Integer& value) const {
    BivariatePoly out;
    for (const auto& [key, c] : terms_) out.add_term(c * int_pow(value, key.first), 0, key.second);
    return out;
}

BivariatePoly BivariatePoly::specialize_t(const Integer& value) const {
    BivariatePoly out;
    for (const auto& [key, c] : terms_) out.add_term(c * int_pow(value, key.second), key.first, 0);
    return out;
}

Integer BivariatePoly::evaluate(const Integer& q, const Integer& t) const {
    Integer out = 0;
    for (const auto& [key, c] : terms_)
        out += c * int_pow(q, key.first) * int_pow(t, key.second);
    return out;
}

std::string BivariatePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Key, Integer>> order(terms_.begin(), terms_.end());
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da < db;
        return a.first < b.first;
    });
    std::ostringstream out;
    bool leading = true;
    for (const auto& [key, c] : order) {
        Integer a = c < 0 ? Integer(-c) : c;
        if (c < 0)
            out << "-";
        else if (!leading)
            out << "+";
        leading = false;
        std::string vars;
        auto power = [](const std::string& v, int e) -> std::string {
            if (e == 0) return "";
            if (e == 1) return v;
            return v + "^" + std::to_string(e);
        };
        vars = power("q", key.first);
        std::string tpart = power("t", key.second);
        if (!vars.empty() && !tpart.empty()) vars += "*";
        vars += tpart;
        if (vars.empty())
            out << a.str();
        else if (a == 1)
            out << vars;
        else
            out << a.str() << "*" << vars;
    }
    return out.str();
}

bool BivariatePoly::try_divide(const BivariatePoly& a, const BivariatePoly& b,
                               BivariatePoly& quot) {
    if (!a.is_polynomial() || !b.is_polynomial())
        throw arithmetic_error("exact division requires polynomial arguments");
    if (b.is_zero()) throw arithmetic_error("division by the zero polynomial");
    quot = BivariatePoly();
    BivariatePoly rem = a;
    const auto lead_b = *b.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto lead_r = *rem.terms_.rbegin();
        int dq = lead_r.first.first - lead_b.first.first;
        int dt = lead_r.first.second - lead_b.first.second;
        if (dq < 0 || dt < 0) return false;
        if (lead_r.second % lead_b.second != 0) return false;
        BivariatePoly m = monomial(lead_r.second / lead_b.second, dq, dt);
        quot += m;
        rem -= m * b;
    }
    return true;
}

namespace {

// Univariate polynomials in q over the integers, index = exponent.
using QP = std::vector<Integer>;

void qp_trim(QP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int qp_deg(const QP& p) { return static_cast<int>(p.size()) - 1; }

QP qp_mul(const QP& a, const QP& b) {
    if (a.empty() || b.empty()) return {};
    QP out(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    qp_trim(out);
    return out;
}

QP qp_scale(const QP& a, const Integer& c) {
    if (c == 0) return {};
    QP out = a;
    for (Integer& x : out) x *= c;
    return out;
}

QP qp_sub(QP a, const QP& b) {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qp_trim(a);
    return a;
}

Integer qp_content(const QP& a) {
    Integer g = 0;
    for (const Integer& x : a) g = boost::multiprecision::gcd(g, x);
    return g;
}

QP qp_divide_exact(const QP& a, const QP& b) {
    // b divides a exactly (callers guarantee it); classic long division.
    if (a.empty()) return {};
    if (b.empty() || a.size() < b.size())
        throw arithmetic_error("inexact polynomial division in gcd");
    QP rem = a, quot(a.size() - b.size() + 1, Integer(0));
    while (qp_deg(rem) >= qp_deg(b)) {
        int shift = qp_deg(rem) - qp_deg(b);
        Integer c = rem.back() / b.back();
        if (c * b.back() != rem.back())
            throw arithmetic_error("inexact coefficient division in polynomial gcd");
        quot[shift] = c;
        QP sub(shift, Integer(0));
        sub.insert(sub.end(), b.begin(), b.end());
        rem = qp_sub(std::move(rem), qp_scale(sub, c));
        if (rem.empty()) break;
    }
    if (!rem.empty()) throw arithmetic_error("inexact polynomial division in gcd");
    qp_trim(quot);
    return quot;
}

QP qp_primitive(const QP& a) {
    Integer c = qp_content(a);
    if (c == 0) return {};
    QP out = a;
    for (Integer& x : out) x /= c;
    return out;
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0).
QP qp_prem(QP a, const QP& b) {
    while (qp_deg(a) >= qp_deg(b) && !a.empty()) {
        int shift = qp_deg(a) - qp_deg(b);
        Integer lead = a.back();
        QP sub(shift, Integer(0));
        sub.insert(sub.end(), b.begin(), b.end());
        a = qp_sub(qp_scale(a, b.back()), qp_scale(sub, lead));
    }
    return a;
}

void qp_positive_leading(QP& a) {
    if (!a.empty() && a.back() < 0)
        for (Integer& x : a) x = -x;
}

QP qp_gcd(QP a, QP b) {
    qp_trim(a);
    qp_trim(b);
    if (a.empty()) {
        qp_positive_leading(b);
        return b;
    }
    if (b.empty()) {
        qp_positive_leading(a);
        return a;
    }
    Integer content = boost::multiprecision::gcd(qp_content(a), qp_content(b));
    a = qp_primitive(a);
    b = qp_primitive(b);
    if (qp_deg(a) < qp_deg(b)) std::swap(a, b);
    while (!b.empty()) {
        QP r = qp_prem(a, b);
        a = b;
        b = qp_primitive(r);
    }
    a = qp_scale(qp_primitive(a), content);
    qp_positive_leading(a);
    return a;
}

// The nested view: polynomial in t whose coefficients are polynomials in q.
using TP = std::vector<QP>;

void tp_trim(TP& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

int tp_deg(const TP& p) { return static_cast<int>(p.size()) - 1; }

TP tp_from(const BivariatePoly& p) {
    TP out;
    for (const auto& [key, c] : p.terms()) {
        auto [qe, te] = key;
        if (static_cast<int>(out.size()) <= te) out.resize(te + 1);
        if (static_cast<int>(out[te].size()) <= qe) out[te].resize(qe + 1, Integer(0));
        out[te][qe] = c;
    }
    for (QP& c : out) qp_trim(c);
    tp_trim(out);
    return out;
}

BivariatePoly tp_to(const TP& p) {
    BivariatePoly out;
    for (int te = 0; te < static_cast<int>(p.size()); ++te)
        for (int qe = 0; qe < static_cast<int>(p[te].size()); ++qe)
            if (p[te][qe] != 0) out += BivariatePoly::monomial(p[te][qe], qe, te);
    return out;
}

QP tp_content(const TP& a) {
    QP g;
    for (const QP& c : a) g = qp_gcd(g, c);
    return g;
}

TP tp_divide_coeffs(const TP& a, const QP& d) {
    TP out = a;
    for (QP& c : out)
        if (!c.empty()) c = qp_divide_exact(c, d);
    return out;
}

TP tp_scale(const TP& a, const QP& c) {
    TP out = a;
    for (QP& x : out) x = qp_mul(x, c);
    tp_trim(out);
    return out;
}

TP tp_sub(TP a, const TP& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] = qp_sub(std::move(a[i]), b[i]);
    tp_trim(a);
    return a;
}

TP tp_shift(const TP& a, int k) {
    if (a.empty()) return a;
    TP out(k);
    out.insert(out.end(), a.begin(), a.end());
    return out;
}

TP tp_prem(TP a, const TP& b) {
    while (tp_deg(a) >= tp_deg(b) && !a.empty()) {
        int shift = tp_deg(a) - tp_deg(b);
        QP lead = a.back();
        a = tp_sub(tp_scale(a, b.back()), tp_scale(tp_shift(b, shift), lead));
    }
    return a;
}

TP tp_primitive(const TP& a) {
    QP c = tp_content(a);
    if (c.empty()) return {};
    return tp_divide_coeffs(a, c);
}

}  // namespace

namespace {

BivariatePoly positive_leading(BivariatePoly p) {
    if (!p.terms().empty() && p.terms().rbegin()->second < 0) return -p;
    return p;
}

Integer integer_content(const BivariatePoly& p) {
    Integer g = 0;
    for (const auto& [key, c] : p.terms()) g = boost::multiprecision::gcd(g, c);
    return g < 0 ? Integer(-g) : g;
}

bool is_constant(const BivariatePoly& p) {
    return p.terms().size() == 1 && p.terms().begin()->first == std::pair<int, int>(0, 0);
}

BivariatePoly transpose_vars(const BivariatePoly& p) {
    BivariatePoly out;
    for (const auto& [key, c] : p.terms())
        out += BivariatePoly::monomial(c, key.second, key.first);
    return out;
}

// Deterministic pseudo-remainder gcd over the integers; correct but its
// coefficients can grow sharply, so it only serves as the fallback path.
BivariatePoly prs_gcd(const BivariatePoly& pa, const BivariatePoly& pb) {
    TP a = tp_from(pa), b = tp_from(pb);
    QP content = qp_gcd(tp_content(a), tp_content(b));
    a = tp_primitive(a);
    b = tp_primitive(b);
    if (tp_deg(a) < tp_deg(b)) std::swap(a, b);
    while (!b.empty()) {
        TP r = tp_prem(a, b);
        a = b;
        b = tp_primitive(r);
    }
    TP g = tp_scale(tp_primitive(a), content);
    return positive_leading(tp_to(g));
}

// --- gcd modulo a word-sized prime: coefficients cannot grow, so the
// pseudo-remainder chain stays cheap; the lifted candidate is verified by
// exact division before being trusted.

using Word = unsigned long long;

constexpr Word kPrimes[] = {2305843009213693951ULL /* 2^61-1 */,
                            9223372036854775783ULL /* largest prime < 2^63 */};

Word mod_mul(Word a, Word b, Word p) {
    return static_cast<Word>((static_cast<unsigned __int128>(a) * b) % p);
}

Word mod_pow(Word a, Word e, Word p) {
    Word out = 1;
    while (e) {
        if (e & 1) out = mod_mul(out, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return out;
}

Word mod_inv(Word a, Word p) { return mod_pow(a, p - 2, p); }

// Univariate polynomials over F_p, index = exponent.
using MQ = std::vector<Word>;

void mq_trim(MQ& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int mq_deg(const MQ& a) { return static_cast<int>(a.size()) - 1; }

MQ mq_mul(const MQ& a, const MQ& b, Word p) {
    if (a.empty() || b.empty()) return {};
    MQ out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
    }
    mq_trim(out);
    return out;
}

MQ mq_scale(const MQ& a, Word c, Word p) {
    if (c == 0) return {};
    MQ out = a;
    for (Word& x : out) x = mod_mul(x, c, p);
    return out;
}

MQ mq_sub(MQ a, const MQ& b, Word p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    mq_trim(a);
    return a;
}

// Remainder of a by b; quot receives the quotient when requested.
MQ mq_divmod(MQ a, const MQ& b, Word p, MQ* quot) {
    Word inv = mod_inv(b.back(), p);
    MQ q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
    while (mq_deg(a) >= mq_deg(b) && !a.empty()) {
        int shift = mq_deg(a) - mq_deg(b);
        Word c = mod_mul(a.back(), inv, p);
        q[shift] = c;
        MQ sub(shift, 0);
        sub.insert(sub.end(), b.begin(), b.end());
        a = mq_sub(std::move(a), mq_scale(sub, c, p), p);
    }
    if (quot) {
        mq_trim(q);
        *quot = std::move(q);
    }
    return a;
}

MQ mq_monic(MQ a, Word p) {
    if (!a.empty() && a.back() != 1) a = mq_scale(a, mod_inv(a.back(), p), p);
    return a;
}

MQ mq_gcd(MQ a, MQ b, Word p) {
    mq_trim(a);
    mq_trim(b);
    while (!b.empty()) {
        MQ r = mq_divmod(std::move(a), b, p, nullptr);
        a = std::move(b);
        b = std::move(r);
    }
    return mq_monic(std::move(a), p);
}

// Nested view mod p: polynomial in t with F_p[q] coefficients.
using MT = std::vector<MQ>;

void mt_trim(MT& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}

int mt_deg(const MT& a) { return static_cast<int>(a.size()) - 1; }

MT mt_from(const BivariatePoly& poly, Word p) {
    MT out;
    for (const auto& [key, c] : poly.terms()) {
        auto [qe, te] = key;
        Integer r = c % Integer(p);
        if (r < 0) r += Integer(p);
        Word w = r.convert_to<Word>();
        if (w == 0) continue;
        if (static_cast<int>(out.size()) <= te) out.resize(te + 1);
        if (static_cast<int>(out[te].size()) <= qe) out[te].resize(qe + 1, 0);
        out[te][qe] = w;
    }
    for (MQ& c : out) mq_trim(c);
    mt_trim(out);
    return out;
}

MQ mt_content(const MT& a, Word p) {
    MQ g;
    for (const MQ& c : a) {
        g = mq_gcd(g, c, p);
        if (mq_deg(g) == 0) break;
    }
    return g;
}

MT mt_primitive(MT a, Word p) {
    MQ c = mt_content(a, p);
    if (c.empty()) return {};
    if (mq_deg(c) == 0) {
        Word inv = mod_inv(c[0], p);
        for (MQ& x : a) x = mq_scale(x, inv, p);
        return a;
    }
    for (MQ& x : a)
        if (!x.empty()) {
            MQ q;
            mq_divmod(x, c, p, &q);
            x = std::move(q);
        }
    return a;
}

MT mt_prem(MT a, const MT& b, Word p) {
    while (mt_deg(a) >= mt_deg(b) && !a.empty()) {
        int shift = mt_deg(a) - mt_deg(b);
        MQ lead = a.back();
        MT scaled(a.size());
        for (size_t i = 0; i < a.size(); ++i) scaled[i] = mq_mul(a[i], b.back(), p);
        MT shifted(shift);
        for (const MQ& c : b) shifted.push_back(mq_mul(c, lead, p));
        for (size_t i = 0; i < shifted.size(); ++i)
            scaled[i] = mq_sub(std::move(scaled[i]), shifted[i], p);
        a = std::move(scaled);
        mt_trim(a);
    }
    return a;
}

// Candidate gcd mod p, primitive with leading scalar one, or nullopt when an
// input's leading coefficient vanishes mod p.
std::optional<MT> mt_gcd(const BivariatePoly& pa, const BivariatePoly& pb, Word p) {
    MT a = mt_from(pa, p), b = mt_from(pb, p);
    if (mt_deg(a) != pa.max_t_exponent() || mt_deg(b) != pb.max_t_exponent()) return std::nullopt;
    if (a.empty() || b.empty()) return std::nullopt;
    MQ content = mq_gcd(mt_content(a, p), mt_content(b, p), p);
    a = mt_primitive(std::move(a), p);
    b = mt_primitive(std::move(b), p);
    if (mt_deg(a) < mt_deg(b)) std::swap(a, b);
    while (!b.empty()) {
        MT r = mt_prem(std::move(a), b, p);
        a = std::move(b);
        b = mt_primitive(std::move(r), p);
    }
    a = mt_primitive(std::move(a), p);
    if (mq_deg(content) > 0)
        for (MQ& c : a) c = mq_mul(c, content, p);
    // Normalize the top scalar to one so lifting is canonical.
    if (!a.empty() && !a.back().empty()) {
        Word inv = mod_inv(a.back().back(), p);
        for (MQ& c : a) c = mq_scale(c, inv, p);
    }
    return a;
}

BivariatePoly lift_symmetric(const MT& a, Word p, const Integer& scale) {
    BivariatePoly out;
    Integer half = Integer(p) / 2;
    for (int te = 0; te < static_cast<int>(a.size()); ++te)
        for (int qe = 0; qe < static_cast<int>(a[te].size()); ++qe) {
            if (a[te][qe] == 0) continue;
            Integer c = Integer(a[te][qe]);
            if (c > half) c -= Integer(p);
            out += BivariatePoly::monomial(c * scale, qe, te);
        }
    return out;
}

BivariatePoly divide_integer(const BivariatePoly& a, const Integer& c) {
    BivariatePoly out;
    for (const auto& [key, coeff] : a.terms())
        out += BivariatePoly::monomial(coeff / c, key.first, key.second);
    return out;
}

// Integer coefficient at the highest t, then highest q, matching the corner
// used to normalize candidates mod p.
Integer corner_tq(const BivariatePoly& a) {
    int best_t = -1, best_q = -1;
    Integer out = 0;
    for (const auto& [key, c] : a.terms()) {
        auto [qe, te] = key;
        if (te > best_t || (te == best_t && qe > best_q)) {
            best_t = te;
            best_q = qe;
            out = c;
        }
    }
    return out;
}

// Modular gcd attempt: lift a candidate from one prime at a time and verify it
// divides both inputs exactly; wrong or unlucky candidates are simply rejected.
std::optional<BivariatePoly> modular_gcd(const BivariatePoly& pa, const BivariatePoly& pb) {
    Integer ca = integer_content(pa), cb = integer_content(pb);
    Integer g0 = boost::multiprecision::gcd(ca, cb);
    BivariatePoly a = divide_integer(pa, ca);
    BivariatePoly b = divide_integer(pb, cb);
    for (Word p : kPrimes) {
        std::optional<MT> cand = mt_gcd(a, b, p);
        if (!cand) continue;
        if (cand->empty()) continue;
        if (mt_deg(*cand) == 0 && mq_deg(cand->front()) == 0) {
            // Coprime apart from integer content.
            return BivariatePoly(g0);
        }
        // The true primitive gcd usually has corner coefficient +-1 here, so
        // lifting the normalized image directly is almost always right; the
        // gcd of the inputs' corner coefficients covers the remaining cases.
        Integer corner = boost::multiprecision::gcd(corner_tq(a), corner_tq(b));
        std::vector<Integer> leads{Integer(1)};
        if (corner > 1) leads.push_back(corner);
        for (const Integer& lead : leads) {
            BivariatePoly lifted = lift_symmetric(*cand, p, lead);
            if (lifted.is_zero()) continue;
            Integer lc = integer_content(lifted);
            if (lc != 0 && lc != 1) lifted = divide_integer(lifted, lc);
            BivariatePoly quot;
            if (BivariatePoly::try_divide(a, lifted, quot) &&
                BivariatePoly::try_divide(b, lifted, quot)) {
                BivariatePoly out = lifted;
                if (g0 != 1) {
                    BivariatePoly scaled;
                    for (const auto& [key, c] : out.terms())
                        scaled += BivariatePoly::monomial(c * g0, key.first, key.second);
                    out = scaled;
                }
                return positive_leading(out);
            }
        }
    }
    return std::nullopt;
}

}  // namespace

BivariatePoly poly_gcd(const BivariatePoly& pa, const BivariatePoly& pb) {
    if (!pa.is_polynomial() || !pb.is_polynomial())
        throw arithmetic_error("polynomial gcd requires polynomial arguments");
    if (pa.is_zero()) return positive_leading(pb);
    if (pb.is_zero()) return positive_leading(pa);
    if (pa == pb) return positive_leading(pa);
    if (is_constant(pa) || is_constant(pb)) {
        Integer g = boost::multiprecision::gcd(integer_content(pa), integer_content(pb));
        return BivariatePoly(g);
    }
    // The outer pseudo-remainder chain runs over the main variable, so pick the
    // variable of smaller degree as main to keep that chain short.
    int tdeg = std::max(pa.max_t_exponent(), pb.max_t_exponent());
    int qdeg = std::max(pa.max_q_exponent(), pb.max_q_exponent());
    if (qdeg < tdeg)
        return positive_leading(transpose_vars(poly_gcd(transpose_vars(pa), transpose_vars(pb))));
    if (std::optional<BivariatePoly> fast = modular_gcd(pa, pb)) return *fast;
    return prs_gcd(pa, pb);
}

BivariatePoly one_minus_monomial(int qa, int tb) {
    BivariatePoly out(1);
    out -= BivariatePoly::monomial(1, qa, tb);
    return out;
}

}  // namespace katabol
