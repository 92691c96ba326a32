#pragma once

// Text formats: parsing of CLI inputs (weights, weight sets, Cartan
// matrices, rationals) and deterministic dumps of the library's value
// types.  All emitters iterate ordered containers only, so a fixed input
// produces byte-identical output.

#include <gmpxx.h>

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qschur/hwmodule.hpp"
#include "qschur/present.hpp"
#include "qschur/schur.hpp"

namespace qschur {

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

inline long parse_long(const std::string& tok) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(tok, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + tok + "'");
    }
    if (used != tok.size())
        throw std::invalid_argument("trailing junk in integer: '" + tok + "'");
    return value;
}

// "1,0" -> (1,0); surrounding whitespace around tokens is accepted
inline Weight parse_weight(const std::string& s) {
    Weight w;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) {
        std::size_t b = tok.find_first_not_of(" \t");
        std::size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("empty weight coordinate in '" + s + "'");
        w.push_back(parse_long(tok.substr(b, e - b + 1)));
    }
    if (w.empty()) throw std::invalid_argument("empty weight string");
    return w;
}

// "0;2" or "0,0;1,0" -> weight set; all members must have equal rank
inline WeightSet parse_weight_set(const std::string& s) {
    WeightSet out;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ';')) out.insert(parse_weight(tok));
    if (out.empty()) throw std::invalid_argument("empty weight-set string");
    std::size_t rank = out.begin()->size();
    for (const Weight& w : out)
        if (w.size() != rank)
            throw std::invalid_argument("mixed ranks in weight set '" + s + "'");
    return out;
}

// "A1", "G2", ... -> builtin Cartan matrix
inline CartanData parse_type_label(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("type label too short: '" + s + "'");
    char family = s[0];
    if (family >= 'a' && family <= 'z') family = static_cast<char>(family - 'a' + 'A');
    long rank = parse_long(s.substr(1));
    if (rank < 1 || rank > 64)
        throw std::invalid_argument("rank out of range in type label '" + s + "'");
    return builtin_cartan(family, static_cast<int>(rank));
}

// first line n, then n lines of n space-separated integers
inline CartanData read_cartan_matrix(std::istream& in) {
    long n = 0;
    if (!(in >> n) || n < 1 || n > 64)
        throw std::invalid_argument("bad rank line in Cartan matrix file");
    std::vector<std::vector<long>> a(static_cast<std::size_t>(n),
                                     std::vector<long>(static_cast<std::size_t>(n)));
    for (auto& row : a)
        for (long& x : row)
            if (!(in >> x)) throw std::invalid_argument("truncated Cartan matrix file");
    return validate_cartan(a);
}

// "7/3", "-2", "5" -> exact rational; denominator must be nonzero
inline mpq_class parse_rational(const std::string& s) {
    std::size_t slash = s.find('/');
    mpz_class num, den = 1;
    try {
        num = mpz_class(slash == std::string::npos ? s : s.substr(0, slash));
        if (slash != std::string::npos) den = mpz_class(s.substr(slash + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------
// scalar serialization
// ---------------------------------------------------------------------------

// ascending [exponent, coefficient] pairs, zero coefficients omitted
inline std::string laurent_pairs(const LaurentPoly& p) {
    std::string out = "[";
    bool first = true;
    for (const auto& [e, c] : p.pairs()) {
        if (!first) out += ",";
        first = false;
        out += "[" + std::to_string(e) + "," + c.get_str() + "]";
    }
    return out + "]";
}

namespace detail {
inline std::string dense_coeffs(const LaurentPoly& p) {
    std::string out = "[";
    if (!p.is_zero()) {
        for (long e = 0; e <= p.max_exp(); ++e) {
            if (e) out += ",";
            out += p.coeff(e).get_str();
        }
    }
    return out + "]";
}
} // namespace detail

// {shift, num: coeff list low-to-high, den: coeff list low-to-high}
inline std::string ratfun_terms(const RationalFunction& f) {
    return "{shift:" + std::to_string(f.shift()) + ",num:" + detail::dense_coeffs(f.num()) +
           ",den:" + detail::dense_coeffs(f.den()) + "}";
}

inline std::string weight_set_str(const WeightSet& ws) {
    std::string out = "{";
    bool first = true;
    for (const Weight& w : ws) {
        if (!first) out += ",";
        first = false;
        out += weight_str(w);
    }
    return out + "}";
}

// ---------------------------------------------------------------------------
// dumps
// ---------------------------------------------------------------------------

namespace detail {

inline void write_cartan_header(std::ostream& out, const CartanData& c) {
    out << "cartan " << c.n << "\n";
    for (int i = 0; i < c.n; ++i) {
        out << "row";
        for (int j = 0; j < c.n; ++j) out << " " << c.a[i][j];
        out << "\n";
    }
    out << "symmetrizers";
    for (int i = 0; i < c.n; ++i) out << " " << c.d[i];
    out << "\n";
}

// sparse triplet form, one [row, col, RationalFunction] per line
inline void write_sparse(std::ostream& out, const std::string& name,
                         const Matrix<RationalFunction>& m) {
    out << "matrix " << name << " " << m.rows() << " " << m.cols() << "\n";
    for (int r = 0; r < m.rows(); ++r)
        for (int cc = 0; cc < m.cols(); ++cc)
            if (!m.at(r, cc).is_zero())
                out << "[" << r << "," << cc << "," << ratfun_terms(m.at(r, cc)) << "]\n";
    out << "end\n";
}

} // namespace detail

inline void write_module_dump(std::ostream& out, const HWModule& m) {
    out << "module\n";
    detail::write_cartan_header(out, m.c);
    out << "lambda " << weight_str(m.lambda) << "\n";
    out << "dimension " << m.dim() << "\n";
    out << "basis\n";
    for (std::size_t k = 0; k < m.basis.size(); ++k)
        out << k << " " << weight_str(m.basis[k].first) << " " << m.basis[k].second << "\n";
    for (std::size_t i = 0; i < m.E.size(); ++i)
        detail::write_sparse(out, "E_" + std::to_string(i + 1), m.E[i]);
    for (std::size_t i = 0; i < m.F.size(); ++i)
        detail::write_sparse(out, "F_" + std::to_string(i + 1), m.F[i]);
}

inline void write_rep_dump(std::ostream& out, const SchurRep& r) {
    out << "rep\n";
    detail::write_cartan_header(out, r.c);
    out << "pi " << weight_set_str(r.pi) << "\n";
    out << "wpi " << weight_set_str(r.wpi) << "\n";
    out << "dimensions";
    for (const HWModule& m : r.summands) out << " " << m.dim();
    out << "\n";
    out << "total " << r.dim() << "\n";
    out << "idempotents\n";
    for (const auto& [mu, rows] : r.support)
        out << weight_str(mu) << " rank " << rows.size() << "\n";
    for (std::size_t i = 0; i < r.E.size(); ++i)
        detail::write_sparse(out, "E_" + std::to_string(i + 1), r.E[i]);
    for (std::size_t i = 0; i < r.F.size(); ++i)
        detail::write_sparse(out, "F_" + std::to_string(i + 1), r.F[i]);
    for (const auto& [mu, rows] : r.support)
        detail::write_sparse(out, "i_" + weight_str(mu), r.idempotent(mu));
    KElements k = k_elements(r);
    for (std::size_t i = 0; i < k.k.size(); ++i) {
        detail::write_sparse(out, "K_" + std::to_string(i + 1), k.k[i]);
        detail::write_sparse(out, "Kinv_" + std::to_string(i + 1), k.kinv[i]);
    }
}

// line-per-check table plus a machine-readable summary line
inline void write_report(std::ostream& out, const VerificationReport& rep,
                         bool structured = false) {
    if (structured) {
        out << "suite=" << rep.suite << "\n";
        for (std::size_t k = 0; k < rep.items.size(); ++k) {
            const VerificationItem& it = rep.items[k];
            out << "check." << k << ".relation=" << it.relation << "\n";
            out << "check." << k << ".params=" << it.params << "\n";
            out << "check." << k << ".pass=" << (it.pass ? 1 : 0) << "\n";
            if (!it.pass) out << "check." << k << ".defect=" << it.defect << "\n";
        }
        out << "checks=" << rep.items.size() << "\n";
        out << "failures=" << rep.failures() << "\n";
        out << "pass=" << (rep.pass() ? 1 : 0) << "\n";
        return;
    }
    out << "suite: " << rep.suite << "\n";
    for (const VerificationItem& it : rep.items) {
        out << (it.pass ? "ok   " : "FAIL ") << it.relation;
        if (!it.params.empty()) out << " [" << it.params << "]";
        if (!it.pass) out << " defect " << it.defect;
        out << "\n";
    }
    out << "summary: checks=" << rep.items.size() << " failures=" << rep.failures()
        << " result=" << (rep.pass() ? "pass" : "fail") << "\n";
}

namespace detail {

// plain prefix syntax: (+ (* coef sym sym ...) ...)
inline std::string nc_poly_str(const Alphabet& alphabet, const NCPoly& p) {
    if (p.empty()) return "(+ )";
    std::string out = "(+";
    for (const auto& [w, coef] : p) {
        out += " (* " + ratfun_terms(coef);
        for (int s : w) out += " " + alphabet.name(s);
        out += ")";
    }
    return out + ")";
}

} // namespace detail

inline void write_presentation_dump(std::ostream& out, const NCPresentation& p,
                                    const RewriteSystem* sys = nullptr) {
    out << "presentation\n";
    detail::write_cartan_header(out, p.c);
    out << "pi " << weight_set_str(p.pi) << "\n";
    out << "wpi " << weight_set_str(p.wpi) << "\n";
    out << "coefficients "
        << (p.classical ? "classical" : (p.v_eval ? "evaluated" : "generic")) << "\n";
    out << "alphabet " << p.alphabet.size() << "\n";
    for (int s = 0; s < p.alphabet.size(); ++s)
        out << s << " " << p.alphabet.name(s) << "\n";
    out << "relations " << p.relations.size() << "\n";
    for (const NCPoly& rel : p.relations)
        out << detail::nc_poly_str(p.alphabet, rel) << "\n";
    if (sys) {
        out << "completion rounds " << sys->completion_log.size() << "\n";
        out << "log";
        for (long cnt : sys->completion_log) out << " " << cnt;
        out << "\n";
        out << "rules " << sys->rules.size() << "\n";
        out << "confluent " << (sys->confluent ? "yes" : "no") << "\n";
    }
}

} // namespace qschur
