#include "sp4cert/classify.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "sp4cert/errors.hpp"
#include "sp4cert/jordan.hpp"
#include "sp4cert/sp4.hpp"

namespace sp4cert {

// ---------------------------------------------------------------- pencils

namespace {

using PolyMat = std::vector<std::vector<Poly>>;

Poly poly_det(const PolyMat& m) {
    size_t n = m.size();
    if (n == 0) return Poly::constant(1);
    if (n == 1) return m[0][0];
    Poly out;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMat minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        Poly term = m[0][j] * poly_det(minor);
        out = (j % 2 == 0) ? out + term : out - term;
    }
    return out;
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

// gcd of all k x k minors (zero polynomial when they all vanish).
Poly minor_gcd(const PolyMat& m, int k) {
    if (k == 0) return Poly::constant(1);
    Poly g;
    for (auto& rows : subsets(4, k))
        for (auto& cols : subsets(4, k)) {
            PolyMat sub;
            for (int r : rows) {
                std::vector<Poly> row;
                for (int c : cols) row.push_back(m[r][c]);
                sub.push_back(row);
            }
            g = gcd(g, poly_det(sub));
        }
    return g;
}

}  // namespace

std::vector<std::pair<int, int>> PencilStrata::counts() const {
    std::vector<std::pair<int, int>> out;
    for (auto& l : lines) {
        auto it = std::find_if(out.begin(), out.end(), [&](auto& p) { return p.first == l.rank; });
        if (it == out.end()) out.push_back({l.rank, 1});
        else ++it->second;
    }
    std::sort(out.begin(), out.end());
    return out;
}

PencilStrata pencil_rank_strata(const Mat4& n1, const Mat4& n2) {
    if (echelon_span({n1, n2}).dim() != 2) throw DependentInputs("pencil needs two independent matrices");
    PolyMat m(4, std::vector<Poly>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = Poly({n2(i, j), n1(i, j)});
    std::vector<Poly> g(5);
    int r = 0;
    for (int k = 0; k <= 4; ++k) {
        g[k] = minor_gcd(m, k);
        if (!g[k].is_zero()) r = k;
    }
    PencilStrata out;
    out.generic_rank = r;
    Poly top = g[r];
    Poly rest = top;
    if (top.degree() > 0) {
        for (auto& rm : rational_roots(top)) {
            int rk = 0;
            for (int k = r; k >= 0; --k)
                if (g[k].eval(rm.root) != 0) {
                    rk = k;
                    break;
                }
            out.lines.push_back({"t=" + to_string(rm.root), rk});
            for (int i = 0; i < rm.mult; ++i) rest = rest.divmod(Poly({-rm.root, Rational(1)})).first;
        }
        Poly p = squarefree_part(rest);
        if (p.degree() > 0) {
            // Irrational roots of p: those with rank <= j are the roots of gcd(p, g[j+1]).
            int idx = 0;
            for (int j = 0; j < r; ++j) {
                int lo = j == 0 ? 0 : gcd(p, g[j]).degree();
                if (g[j].is_zero()) lo = p.degree();
                int hi = g[j + 1].is_zero() ? p.degree() : gcd(p, g[j + 1]).degree();
                for (int c = 0; c < hi - lo; ++c)
                    out.lines.push_back({"root " + std::to_string(++idx) + " of " + p.to_string("t"), j});
            }
        }
    }
    int rinf = rank(n1);
    if (rinf < r) out.lines.push_back({"t=inf", rinf});
    return out;
}

// ---------------------------------------------------------------- helpers

std::string to_string(SemisimpleContent c) {
    switch (c) {
        case SemisimpleContent::HasCartan: return "has_cartan";
        case SemisimpleContent::HasRegularSS: return "has_regular_ss";
        case SemisimpleContent::HasNonregularSSOnly: return "has_nonregular_ss_only";
        case SemisimpleContent::MixedOnly: return "mixed_only";
        case SemisimpleContent::AllNilpotent: return "all_nilpotent";
    }
    return "?";
}

namespace {

Mat4 combine(const std::vector<Mat4>& b, const QVec& c) {
    Mat4 m;
    for (size_t i = 0; i < b.size(); ++i)
        if (c[i] != 0) m += b[i] * c[i];
    return m;
}

// Deterministic pseudo-random elements of span(b), small integer coefficients.
std::vector<Mat4> sample_elements(const std::vector<Mat4>& b, int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::vector<Mat4> out;
    for (int s = 0; s < count; ++s) {
        QVec c(b.size());
        for (auto& x : c) x = coef(rng);
        out.push_back(combine(b, c));
    }
    return out;
}

int generic_rank(const Subspace& s) {
    auto b = s.basis();
    int r = 0;
    for (auto& m : b) r = std::max(r, rank(m));
    if (b.empty()) return 0;
    for (auto& m : sample_elements(b, 16, 7)) r = std::max(r, rank(m));
    return r;
}

std::string render(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

std::string render(const std::vector<Rational>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + "]";
}

// Eigenvalues with multiplicity, or empty if the polynomial does not split.
std::optional<std::vector<Rational>> spectrum(const Poly& cp) {
    std::vector<Rational> out;
    for (auto& r : rational_roots(cp))
        for (int i = 0; i < r.mult; ++i) out.push_back(r.root);
    if (static_cast<int>(out.size()) != cp.degree()) return std::nullopt;
    return out;
}

// Scale-invariant ratios of characteristic-polynomial coefficients: under
// y -> s y the coefficient of x^(n-k) scales by s^k.
std::string coefficient_ratios(const std::vector<Poly>& polys) {
    // Reference coefficient: the first nonzero c_k (k >= 1) of the first poly.
    const Poly& p0 = polys.front();
    int n0 = p0.degree(), k0 = 0;
    for (int k = 1; k <= n0; ++k)
        if (p0.coeff(n0 - k) != 0) {
            k0 = k;
            break;
        }
    if (k0 == 0) return "cp{nilpotent}";
    Rational ref = p0.coeff(n0 - k0);
    std::string s = "cp{";
    for (size_t i = 0; i < polys.size(); ++i) {
        int n = polys[i].degree();
        if (i) s += ";";
        for (int k = 1; k <= n; ++k) {
            // c_k^k0 / ref^k
            Rational v = pow_q(polys[i].coeff(n - k), k0) / pow_q(ref, k);
            s += (k > 1 ? "," : "") + to_string(v);
        }
    }
    return s + "}";
}

// Generalised-eigenvalue weights of the commuting family {z_i}: for a generic y
// in their span with rational spectrum, w(z) = tr(z P_w) / mult_w with P_w the
// spectral projector of the semisimple part of y.
std::optional<std::vector<std::pair<std::vector<Rational>, int>>> weights_of(const std::vector<QMat>& zs) {
    int n = zs.front().rows();
    std::optional<std::vector<std::pair<std::vector<Rational>, int>>> best;
    size_t best_distinct = 0;
    for (int m = 0; m <= 50; ++m) {
        QMat y = zs[0];
        Rational pw = m;
        for (size_t i = 1; i < zs.size(); ++i) {
            y = y + zs[i] * pw;
            pw *= m;
        }
        auto roots = rational_roots(char_poly(y));
        int total = 0;
        for (auto& r : roots) total += r.mult;
        if (total != n) continue;
        if (best && roots.size() <= best_distinct) continue;
        QMat s = jordan_decompose(y).first;
        std::vector<std::pair<std::vector<Rational>, int>> ws;
        for (auto& r : roots) {
            QMat p = QMat::identity(n);
            for (auto& o : roots) {
                if (o.root == r.root) continue;
                p = p * ((s - QMat::identity(n) * o.root) * (1 / (r.root - o.root)));
            }
            std::vector<Rational> w;
            for (auto& z : zs) w.push_back((z * p).trace() / r.mult);
            ws.push_back({w, r.mult});
        }
        best = ws;
        best_distinct = roots.size();
        if (static_cast<int>(best_distinct) == n) break;
    }
    return best;
}

std::string spectrum_rank1(const Mat4& y, const QMat& ady) {
    auto s4 = spectrum(char_poly(y));
    auto sad = spectrum(char_poly(ady));
    if (!s4 || !sad) return coefficient_ratios({char_poly(y), char_poly(ady)});
    Rational top = 0;
    for (auto& v : *s4) top = std::max(top, abs_q(v));
    std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>> best;
    for (int sg : {1, -1}) {
        Rational f = Rational(sg) / top;
        std::vector<Rational> a, b;
        for (auto& v : *s4) a.push_back(v * f);
        for (auto& v : *sad) b.push_back(v * f);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        auto cand = std::make_pair(a, b);
        if (!best || cand < *best) best = cand;
    }
    return "ss" + render(best->first) + ";ad" + render(best->second);
}

std::string spectrum_rank2(const std::vector<Mat4>& torus, const std::vector<QMat>& ads) {
    std::vector<QMat> zs4;
    for (auto& t : torus) zs4.push_back(to_qmat(t));
    auto w4 = weights_of(zs4);
    auto wad = weights_of(ads);
    if (!w4 || !wad) return "weights{irrational}";
    // Basis f1, f2 among the Q^4 weights.
    std::vector<std::vector<Rational>> nonzero;
    for (auto& [w, m] : *w4)
        if (w[0] != 0 || w[1] != 0) nonzero.push_back(w);
    if (nonzero.empty()) return "weights{degenerate}";
    auto f1 = nonzero[0];
    std::optional<std::vector<Rational>> f2;
    for (auto& w : nonzero)
        if (f1[0] * w[1] - f1[1] * w[0] != 0) {
            f2 = w;
            break;
        }
    if (!f2) return "weights{degenerate}";
    Rational d = f1[0] * (*f2)[1] - f1[1] * (*f2)[0];
    auto in_basis = [&](const std::vector<Rational>& w) {
        return std::pair<Rational, Rational>(Rational((w[0] * (*f2)[1] - w[1] * (*f2)[0]) / d),
                                            Rational((f1[0] * w[1] - f1[1] * w[0]) / d));
    };
    using Pt = std::pair<Rational, Rational>;
    std::vector<Pt> p4, pad;
    for (auto& [w, m] : *w4)
        for (int i = 0; i < m; ++i) p4.push_back(in_basis(w));
    for (auto& [w, m] : *wad)
        for (int i = 0; i < m; ++i) pad.push_back(in_basis(w));
    std::optional<std::pair<std::vector<Pt>, std::vector<Pt>>> best;
    for (int swap = 0; swap < 2; ++swap)
        for (int e1 : {1, -1})
            for (int e2 : {1, -1}) {
                auto act = [&](const Pt& p) {
                    Pt q = swap ? Pt{p.second, p.first} : p;
                    return Pt{q.first * e1, q.second * e2};
                };
                std::vector<Pt> a, b;
                for (auto& p : p4) a.push_back(act(p));
                for (auto& p : pad) b.push_back(act(p));
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                auto cand = std::make_pair(a, b);
                if (!best || cand < *best) best = cand;
            }
    auto show = [](const std::vector<Pt>& v) {
        std::string s = "[";
        for (size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::string("(") + to_string(v[i].first) + "," + to_string(v[i].second) + ")";
        return s + "]";
    };
    return "wt" + show(best->first) + ";ad" + show(best->second);
}

}  // namespace

// ---------------------------------------------------------------- subspaces

Subspace nilpotent_subspace(const Subspace& s) {
    auto b = s.basis();
    if (b.empty()) return s;
    std::vector<Mat4> probes = b;
    for (auto& m : sample_elements(b, 12, 11)) probes.push_back(m);
    for (int round = 0; round < 16; ++round) {
        std::vector<QVec> rows;
        for (auto& y : probes) {
            Mat4 pk = Mat4::identity();
            for (int k = 0; k < 4; ++k) {
                QVec row;
                for (auto& x : b) row.push_back((x * pk).trace());
                rows.push_back(row);
                pk = pk * y;
            }
        }
        std::vector<Mat4> cand;
        for (auto& c : kernel(QMat::from_rows(rows))) cand.push_back(combine(b, c));
        std::vector<Mat4> checks = cand;
        if (!cand.empty())
            for (auto& m : sample_elements(cand, 8, 13 + round)) checks.push_back(m);
        bool ok = true;
        for (auto& m : checks)
            if (!is_nilpotent_mat(m)) {
                probes.push_back(m);
                ok = false;
            }
        if (ok) return echelon_span(cand);
    }
    throw UnrecognizedFamily("nilpotent ideal did not stabilise");
}

Subspace maximal_torus(const Subspace& s) {
    auto b = s.basis();
    if (b.empty()) return s;
    StructureConstants sc = structure_constants(s);
    VecSpace h = sc_cartan_subalgebra(sc);
    std::vector<QVec> nil_parts;
    std::vector<Mat4> hm;
    for (auto& c : h.basis()) {
        Mat4 m = combine(b, c);
        hm.push_back(m);
        nil_parts.push_back(jordan_decompose(m).nilpotent.to_vec());
    }
    std::vector<Mat4> out;
    for (auto& c : kernel(QMat::from_cols(nil_parts))) out.push_back(combine(hm, c));
    return echelon_span(out);
}

std::string ad_spectrum(const Subspace& s) {
    Subspace v = nilpotent_subspace(s);
    int k = s.dim() - v.dim();
    if (k == 0) return "nilpotent";
    StructureConstants sc = structure_constants(s);
    auto comp = complement_basis(s.space(), v.space());
    if (k == 1) {
        Mat4 y = Mat4::from_flat(comp[0]);
        return spectrum_rank1(y, sc.ad(s.coords(y)));
    }
    std::vector<Mat4> torus;
    std::vector<QMat> ads;
    for (auto& c : comp) {
        Mat4 y = Mat4::from_flat(c);
        torus.push_back(y);
        ads.push_back(sc.ad(s.coords(y)));
    }
    return spectrum_rank2(torus, ads);
}

InvariantSignature signature(const Subspace& s) {
    InvariantSignature sig;
    sig.dim = s.dim();
    sig.derived_dims = dims_of(derived_series(s));
    sig.lcs_dims = dims_of(lower_central_series(s));
    sig.is_abelian = is_abelian(s);
    Subspace v = nilpotent_subspace(s);
    sig.nilpotent_dim = v.dim();
    sig.nilpotent_generic_rank = generic_rank(v);
    sig.derived_generic_rank = generic_rank(bracket_space(s, s));
    if (v.dim() == 2) {
        auto vb = v.basis();
        sig.nilpotent_rank_strata = pencil_rank_strata(vb[0], vb[1]).counts();
    }
    auto b = s.basis();
    for (auto& m : b)
        if (det(m) != 0) sig.contains_invertible = true;
    if (!sig.contains_invertible && !b.empty())
        for (auto& m : sample_elements(b, 24, 5))
            if (det(m) != 0) {
                sig.contains_invertible = true;
                break;
            }
    if (sig.dim == sig.nilpotent_dim) {
        sig.semisimple_content = SemisimpleContent::AllNilpotent;
    } else {
        Subspace t = maximal_torus(s);
        if (t.dim() >= 2) {
            sig.semisimple_content = SemisimpleContent::HasCartan;
        } else if (t.dim() == 1) {
            Poly sq = squarefree_part(char_poly(t.basis()[0]));
            sig.semisimple_content =
                sq.degree() == 4 ? SemisimpleContent::HasRegularSS : SemisimpleContent::HasNonregularSSOnly;
        } else {
            sig.semisimple_content = SemisimpleContent::MixedOnly;
        }
    }
    sig.ad_spectrum = ad_spectrum(s);
    return sig;
}

std::vector<std::pair<std::string, std::string>> InvariantSignature::fields() const {
    std::string strata = "[";
    for (size_t i = 0; i < nilpotent_rank_strata.size(); ++i)
        strata += (i ? "," : "") + std::string("rank ") + std::to_string(nilpotent_rank_strata[i].first) + " x" +
                  std::to_string(nilpotent_rank_strata[i].second);
    strata += "]";
    return {
        {"dim", std::to_string(dim)},
        {"derived_dims", render(derived_dims)},
        {"lcs_dims", render(lcs_dims)},
        {"is_abelian", is_abelian ? "true" : "false"},
        {"nilpotent_dim", std::to_string(nilpotent_dim)},
        {"nilpotent_generic_rank", std::to_string(nilpotent_generic_rank)},
        {"derived_generic_rank", std::to_string(derived_generic_rank)},
        {"nilpotent_rank_strata", strata},
        {"contains_invertible", contains_invertible ? "true" : "false"},
        {"semisimple_content", to_string(semisimple_content)},
        {"ad_spectrum", ad_spectrum},
    };
}

std::optional<std::string> first_difference(const InvariantSignature& a, const InvariantSignature& b) {
    auto fa = a.fields(), fb = b.fields();
    for (size_t i = 0; i < fa.size(); ++i)
        if (fa[i].second != fb[i].second) return fa[i].first;
    return std::nullopt;
}

}  // namespace sp4cert
