#include "phopf/cartan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace phopf {

namespace {
std::string join_issues(const std::vector<std::string>& issues) {
    std::ostringstream os;
    os << "datum validation failed:";
    for (const auto& s : issues) os << "\n  - " << s;
    return os.str();
}
}  // namespace

datum_error::datum_error(std::vector<std::string> issues_)
    : std::runtime_error(join_issues(issues_)), issues(std::move(issues_)) {}

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> entries) : a_(std::move(entries)) {}

std::vector<std::string> CartanMatrix::validate() const {
    std::vector<std::string> issues;
    size_t n = a_.size();
    for (size_t i = 0; i < n; ++i)
        if (a_[i].size() != n) {
            issues.push_back("Cartan matrix is not square");
            return issues;
        }
    for (size_t i = 0; i < n; ++i) {
        if (a_[i][i] != 2)
            issues.push_back("a_" + std::to_string(i + 1) + std::to_string(i + 1) + " = " +
                             std::to_string(a_[i][i]) + ", expected 2");
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a_[i][j] > 0)
                issues.push_back("a_" + std::to_string(i + 1) + std::to_string(j + 1) + " = " +
                                 std::to_string(a_[i][j]) + " must be <= 0 off the diagonal");
            if ((a_[i][j] == 0) != (a_[j][i] == 0))
                issues.push_back("a_ij=0 <=> a_ji=0 violated at (i,j)=(" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + "): " + std::to_string(a_[i][j]) + " vs " +
                                 std::to_string(a_[j][i]));
        }
    }
    if (!issues.empty()) return issues;
    auto comps = components();
    auto types = component_types();
    for (size_t c = 0; c < comps.size(); ++c) {
        if (types[c] == "?") {
            std::ostringstream os;
            os << "component {";
            for (size_t v : comps[c]) os << " " << (v + 1);
            os << " } is not of a supported finite type (A1, A2, B2, G2, A3)";
            issues.push_back(os.str());
        }
    }
    return issues;
}

std::vector<std::vector<size_t>> CartanMatrix::components() const {
    size_t n = a_.size();
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<size_t> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            for (size_t w = 0; w < n; ++w)
                if (comp[w] < 0 && adjacent(v, w)) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
        }
        ++nc;
    }
    std::vector<std::vector<size_t>> out(static_cast<size_t>(nc));
    for (size_t v = 0; v < n; ++v) out[static_cast<size_t>(comp[v])].push_back(v);
    return out;
}

std::vector<std::string> CartanMatrix::component_types() const {
    std::vector<std::string> out;
    for (const auto& comp : components()) {
        if (comp.size() == 1) {
            out.push_back("A1");
        } else if (comp.size() == 2) {
            int prod = a_[comp[0]][comp[1]] * a_[comp[1]][comp[0]];
            out.push_back(prod == 1 ? "A2" : prod == 2 ? "B2" : prod == 3 ? "G2" : "?");
        } else if (comp.size() == 3) {
            // A3 is the only supported rank-3 type: a path with single bonds
            int deg[3] = {0, 0, 0};
            bool simple = true;
            for (size_t x = 0; x < 3; ++x)
                for (size_t y = 0; y < 3; ++y) {
                    if (x == y) continue;
                    if (adjacent(comp[x], comp[y])) {
                        ++deg[x];
                        if (a_[comp[x]][comp[y]] != -1) simple = false;
                    }
                }
            std::sort(deg, deg + 3);
            out.push_back((simple && deg[0] == 1 && deg[1] == 1 && deg[2] == 2) ? "A3" : "?");
        } else {
            out.push_back("?");
        }
    }
    return out;
}

namespace {

std::vector<int> reflect(const CartanMatrix& a, size_t i, const std::vector<int>& beta) {
    long c = 0;
    for (size_t s = 0; s < a.rank(); ++s) c += a(i, s) * beta[s];
    std::vector<int> out = beta;
    out[i] -= static_cast<int>(c);
    return out;
}

bool is_positive(const std::vector<int>& v) {
    bool nonzero = false;
    for (int x : v) {
        if (x < 0) return false;
        if (x > 0) nonzero = true;
    }
    return nonzero;
}

std::set<std::vector<int>> all_positive_roots(const CartanMatrix& a) {
    std::set<std::vector<int>> roots;
    size_t n = a.rank();
    std::vector<std::vector<int>> frontier;
    for (size_t i = 0; i < n; ++i) {
        std::vector<int> alpha(n, 0);
        alpha[i] = 1;
        roots.insert(alpha);
        frontier.push_back(alpha);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& beta : frontier)
            for (size_t i = 0; i < n; ++i) {
                auto r = reflect(a, i, beta);
                if (is_positive(r) && roots.insert(r).second) next.push_back(r);
            }
        frontier = std::move(next);
    }
    return roots;
}

// Depth-first search for the lexicographically smallest word i_1...i_p with
// beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) running through each positive
// root exactly once; such words are exactly the reduced words of the
// longest Weyl element.
bool longest_word_dfs(const CartanMatrix& a, const std::set<std::vector<int>>& all, std::vector<long>& word,
                      std::vector<std::vector<int>>& produced, std::set<std::vector<int>>& seen) {
    if (produced.size() == all.size()) return true;
    size_t n = a.rank();
    for (size_t i = 0; i < n; ++i) {
        // beta = s_{i_1}...s_{i_k}(alpha_i), applying the word right-to-left
        std::vector<int> beta(n, 0);
        beta[i] = 1;
        for (size_t k = word.size(); k > 0; --k) beta = reflect(a, static_cast<size_t>(word[k - 1]), beta);
        if (!is_positive(beta) || seen.count(beta)) continue;
        word.push_back(static_cast<long>(i));
        produced.push_back(beta);
        seen.insert(beta);
        if (longest_word_dfs(a, all, word, produced, seen)) return true;
        word.pop_back();
        produced.pop_back();
        seen.erase(beta);
    }
    return false;
}

}  // namespace

long RootSystem::rho_identity_check(size_t i) const {
    size_t comp = SIZE_MAX;
    for (size_t c = 0; c < node_components.size(); ++c)
        if (std::find(node_components[c].begin(), node_components[c].end(), i) != node_components[c].end())
            comp = c;
    long acc = 0;
    for (size_t j = 0; j < p; ++j) {
        if (component_of[j] != comp) continue;
        for (size_t s = 0; s < cartan.rank(); ++s) acc += cartan(i, s) * roots[j][s];
    }
    return acc;
}

RootSystem positive_roots(const CartanMatrix& cartan) {
    auto issues = cartan.validate();
    if (!issues.empty()) throw datum_error(std::move(issues));

    RootSystem rs;
    rs.cartan = cartan;
    auto all = all_positive_roots(cartan);
    rs.p = all.size();

    std::vector<std::vector<int>> produced;
    std::set<std::vector<int>> seen;
    std::vector<long> word;
    if (rs.p > 0 && !longest_word_dfs(cartan, all, word, produced, seen))
        throw std::logic_error("no reduced word of the longest element found");
    rs.reduced_word = std::move(word);
    rs.roots = std::move(produced);

    rs.height.resize(rs.p);
    for (size_t k = 0; k < rs.p; ++k)
        rs.height[k] = std::accumulate(rs.roots[k].begin(), rs.roots[k].end(), 0);

    rs.simple_position.assign(cartan.rank(), -1);
    for (size_t k = 0; k < rs.p; ++k) {
        if (rs.height[k] != 1) continue;
        for (size_t i = 0; i < cartan.rank(); ++i)
            if (rs.roots[k][i] == 1) rs.simple_position[i] = static_cast<long>(k);
    }

    // splitting: smallest k1 in convex order with beta_{k1} + beta_{k2} = beta_k
    rs.split.assign(rs.p, {-1, -1});
    std::map<std::vector<int>, size_t> pos;
    for (size_t k = 0; k < rs.p; ++k) pos[rs.roots[k]] = k;
    for (size_t k = 0; k < rs.p; ++k) {
        if (rs.height[k] == 1) continue;
        bool found = false;
        for (size_t k1 = 0; k1 < rs.p && !found; ++k1) {
            std::vector<int> rest(cartan.rank());
            bool ok = true;
            for (size_t s = 0; s < cartan.rank(); ++s) {
                rest[s] = rs.roots[k][s] - rs.roots[k1][s];
                if (rest[s] < 0) ok = false;
            }
            if (!ok || !is_positive(rest)) continue;
            auto it = pos.find(rest);
            if (it == pos.end()) continue;
            size_t k2 = it->second;
            if (k1 < k2) {
                rs.split[k] = {static_cast<long>(k1), static_cast<long>(k2)};
                found = true;
            }
        }
        if (!found) throw std::logic_error("no additive splitting for a non-simple positive root");
    }

    rs.node_components = cartan.components();
    rs.component_of.resize(rs.p);
    for (size_t k = 0; k < rs.p; ++k) {
        size_t node = 0;
        for (size_t s = 0; s < cartan.rank(); ++s)
            if (rs.roots[k][s] > 0) node = s;
        for (size_t c = 0; c < rs.node_components.size(); ++c)
            if (std::find(rs.node_components[c].begin(), rs.node_components[c].end(), node) !=
                rs.node_components[c].end())
                rs.component_of[k] = c;
    }

    // convexity of the produced order
    for (size_t i = 0; i < rs.p; ++i)
        for (size_t j = i + 1; j < rs.p; ++j) {
            std::vector<int> sum(cartan.rank());
            for (size_t s = 0; s < cartan.rank(); ++s) sum[s] = rs.roots[i][s] + rs.roots[j][s];
            auto it = pos.find(sum);
            if (it != pos.end() && !(i < it->second && it->second < j))
                throw std::logic_error("convexity violated by the computed root order");
        }

    return rs;
}

long CartanDatum::ambient_conductor() const { return group.exponent(); }

CartanDatum make_datum(FiniteAbelianGroup group, std::vector<GroupElement> g, std::vector<Character> chi,
                       CartanMatrix cartan) {
    CartanDatum d;
    d.group = std::move(group);
    d.g = std::move(g);
    d.chi = std::move(chi);
    d.cartan = std::move(cartan);
    return d;
}

void validate_datum(const CartanDatum& d) {
    std::vector<std::string> issues = d.cartan.validate();
    size_t theta = d.cartan.rank();
    if (d.g.size() != theta || d.chi.size() != theta)
        issues.push_back("need exactly theta = " + std::to_string(theta) +
                         " grouplikes and characters, got " + std::to_string(d.g.size()) + " and " +
                         std::to_string(d.chi.size()));
    for (const auto& row : d.linking)
        for (const auto& v : row)
            if (v != 0) issues.push_back("unsupported lifting: nonzero linking parameter lambda");
    for (const auto& v : d.root_params)
        if (v != 0) issues.push_back("unsupported lifting: nonzero root-vector parameter mu");
    if (!issues.empty()) throw datum_error(std::move(issues));

    long cond = d.ambient_conductor();
    for (size_t i = 0; i < theta; ++i) {
        if (d.group.pair_exponent(d.chi[i], d.g[i]) == 0)
            issues.push_back("chi_i(g_i) != 1 violated at i=" + std::to_string(i + 1));
    }
    for (size_t i = 0; i < theta; ++i)
        for (size_t j = 0; j < theta; ++j) {
            CycNum lhs = d.group.pair(d.chi[j], d.g[i], cond) * d.group.pair(d.chi[i], d.g[j], cond);
            CycNum rhs = d.q_ii(i).pow(d.cartan(i, j));
            if (lhs != rhs) {
                std::ostringstream os;
                os << "Cartan condition chi_j(g_i)chi_i(g_j) = chi_i(g_i)^a_ij violated at (i,j)=("
                   << (i + 1) << "," << (j + 1) << "): " << lhs.str() << " vs " << rhs.str();
                issues.push_back(os.str());
            }
        }
    if (!issues.empty()) throw datum_error(std::move(issues));

    long E = d.group.exponent();
    auto order_of_qii = [&](size_t i) {
        long e = d.group.pair_exponent(d.chi[i], d.g[i]);
        return E / std::gcd(E, e);
    };
    auto comps = d.cartan.components();
    auto types = d.cartan.component_types();
    for (size_t c = 0; c < comps.size(); ++c) {
        long N0 = order_of_qii(comps[c][0]);
        for (size_t v : comps[c]) {
            long Nv = order_of_qii(v);
            if (Nv != N0)
                issues.push_back("order of chi_i(g_i) is not constant on component " + std::to_string(c + 1) +
                                 ": N_" + std::to_string(comps[c][0] + 1) + "=" + std::to_string(N0) +
                                 " vs N_" + std::to_string(v + 1) + "=" + std::to_string(Nv));
        }
        if (comps[c].size() > 1 && N0 % 2 == 0)
            issues.push_back("N_J = " + std::to_string(N0) + " on the rank-" +
                             std::to_string(comps[c].size()) + " component " + std::to_string(c + 1) +
                             " must be odd");
        if (types[c] == "G2" && N0 % 3 == 0)
            issues.push_back("N_J = " + std::to_string(N0) + " on a G2 component must be prime to 3");
    }
    if (!issues.empty()) throw datum_error(std::move(issues));
}

RootData attach_roots(const CartanDatum& d) {
    RootData rd;
    rd.sys = positive_roots(d.cartan);
    long E = d.group.exponent();
    rd.N.resize(rd.sys.p);
    rd.g_root.resize(rd.sys.p);
    rd.chi_root.resize(rd.sys.p);
    for (size_t k = 0; k < rd.sys.p; ++k) {
        GroupElement gb = d.group.identity();
        Character cb = d.group.trivial_character();
        for (size_t i = 0; i < d.theta(); ++i) {
            gb = d.group.add(gb, d.group.mul_pow(d.g[i], rd.sys.roots[k][i]));
            cb = d.group.add(cb, d.group.mul_pow(d.chi[i], rd.sys.roots[k][i]));
        }
        rd.g_root[k] = std::move(gb);
        rd.chi_root[k] = std::move(cb);
        // N is constant on the component; take it from any simple root there
        size_t i0 = rd.sys.node_components[rd.sys.component_of[k]][0];
        long e = d.group.pair_exponent(d.chi[i0], d.g[i0]);
        rd.N[k] = E / std::gcd(E, e);
    }
    return rd;
}

unsigned long long RootData::pbw_count() const {
    unsigned long long c = 1;
    for (long n : N) c *= static_cast<unsigned long long>(n);
    return c;
}

CartanDatum dual_datum(const CartanDatum& d) {
    CartanDatum out;
    out.group = d.group;  // G^ in the same invariant-factor coordinates
    out.cartan = d.cartan;
    for (size_t i = 0; i < d.theta(); ++i) {
        out.g.push_back(GroupElement{d.chi[i].e});
        out.chi.push_back(Character{d.g[i].e});  // hat(g_i)
    }
    validate_datum(out);
    return out;
}

DoubleDatum double_datum(const CartanDatum& d) {
    size_t theta = d.theta();
    std::vector<long> inv = d.group.invariants();
    std::vector<long> inv2 = inv;
    inv2.insert(inv2.end(), inv.begin(), inv.end());
    FiniteAbelianGroup gg(inv2);

    auto embed = [&](const std::vector<long>& a, const std::vector<long>& b) {
        std::vector<long> e = a;
        e.insert(e.end(), b.begin(), b.end());
        return e;
    };
    std::vector<long> zero(inv.size(), 0);

    DoubleDatum out;
    out.datum.group = gg;
    std::vector<std::vector<int>> b(2 * theta, std::vector<int>(2 * theta, 0));
    for (size_t i = 0; i < theta; ++i)
        for (size_t j = 0; j < theta; ++j) {
            b[i][j] = d.cartan(i, j);
            b[theta + i][theta + j] = d.cartan(i, j);
        }
    out.datum.cartan = CartanMatrix(b);

    for (size_t i = 0; i < theta; ++i) out.datum.g.push_back(gg.element(embed(d.g[i].e, zero)));
    for (size_t i = 0; i < theta; ++i)
        out.datum.g.push_back(gg.element(embed(zero, d.group.neg(d.chi[i]).e)));
    // characters of G x G^ live in G^ x G
    for (size_t i = 0; i < theta; ++i)
        out.datum.chi.push_back(gg.character(embed(d.chi[i].e, d.group.neg(d.g[i]).e)));
    for (size_t i = 0; i < theta; ++i)
        out.datum.chi.push_back(gg.character(embed(d.group.neg(d.chi[i]).e, d.g[i].e)));

    validate_datum(out.datum);

    out.linking.assign(2 * theta, std::vector<mpq_class>(2 * theta, mpq_class(0)));
    for (size_t i = 0; i < theta; ++i) out.linking[i][theta + i] = 1;
    return out;
}

std::vector<int> symmetrizers(const CartanMatrix& cartan) {
    size_t n = cartan.rank();
    std::vector<int> d(n, 0);
    // propagate d_i a_ij = d_j a_ji over each component, then scale to
    // relatively prime positive integers
    for (const auto& comp : cartan.components()) {
        std::vector<size_t> stack{comp[0]};
        d[comp[0]] = 1;
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            for (size_t w : comp) {
                if (d[w] != 0 || !cartan.adjacent(v, w)) continue;
                // d_v * a_vw = d_w * a_wv
                int num = d[v] * cartan(v, w), den = cartan(w, v);
                if (num % den != 0) {
                    for (size_t x : comp) d[x] *= std::abs(den);
                    num = d[v] * cartan(v, w);
                }
                d[w] = num / den;
                stack.push_back(w);
            }
        }
        int g = 0;
        for (size_t v : comp) g = std::gcd(g, d[v]);
        for (size_t v : comp) d[v] /= g;
    }
    return d;
}

CartanDatum two_param_datum(const CartanMatrix& cartan, const std::vector<int>& d_i, long N, long r_exp,
                            long s_exp) {
    auto issues = cartan.validate();
    if (!issues.empty()) throw datum_error(std::move(issues));
    size_t theta = cartan.rank();
    if (d_i.size() != theta) throw std::invalid_argument("two_param_datum: need theta symmetrizers");
    long diff = (((r_exp - s_exp) % N) + N) % N;
    if (std::gcd(diff, N) != 1) {
        throw datum_error({"r s^{-1} = zeta_N^" + std::to_string(diff) + " does not have order N = " +
                           std::to_string(N)});
    }

    auto euler = [&](size_t i, size_t j) -> long {
        if (i < j) return d_i[i] * cartan(i, j);
        if (i == j) return d_i[i];
        return 0;
    };

    FiniteAbelianGroup G(std::vector<long>(theta, N));
    CartanDatum out;
    out.group = G;
    out.cartan = cartan;
    for (size_t i = 0; i < theta; ++i) {
        std::vector<long> e(theta, 0);
        e[i] = 1;
        out.g.push_back(G.element(std::move(e)));
    }
    for (size_t i = 0; i < theta; ++i) {
        std::vector<long> c(theta, 0);
        for (size_t j = 0; j < theta; ++j) c[j] = r_exp * euler(i, j) - s_exp * euler(j, i);
        out.chi.push_back(G.character(std::move(c)));
    }
    validate_datum(out);
    return out;
}

}  // namespace phopf
