#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "sasldpc/protograph.hpp"
#include "sasldpc/rng.hpp"

namespace sasldpc {

namespace {

// Stage-1 graph: one node per (check, copy) and (var, copy), edge list kept
// explicitly so shortest-cycle probes are cheap.
struct SmallGraph {
    int f1;
    int n_checks, n_vars;
    // adjacency: var node id = j*f1+vc, check node id = i*f1+cc
    std::vector<std::vector<int>> var_adj;    // var node -> check nodes
    std::vector<std::vector<int>> check_adj;  // check node -> var nodes

    SmallGraph(int nc, int nv, int f)
        : f1(f), n_checks(nc), n_vars(nv), var_adj(nv * f), check_adj(nc * f) {}

    void add(int check_node, int var_node) {
        var_adj[var_node].push_back(check_node);
        check_adj[check_node].push_back(var_node);
    }

    // Shortest path length from var node v to check node c, not using the
    // direct edge (c, v); INT_MAX if none within the cap.
    int alt_path(int v, int c, int cap) const {
        const int nv = static_cast<int>(var_adj.size());
        std::vector<int> dist_v(var_adj.size(), -1), dist_c(check_adj.size(), -1);
        std::deque<std::pair<int, int>> q;  // (node id, 0=var 1=check)
        dist_v[v] = 0;
        q.emplace_back(v, 0);
        while (!q.empty()) {
            auto [x, side] = q.front();
            q.pop_front();
            int d = side == 0 ? dist_v[x] : dist_c[x];
            if (d >= cap) continue;
            if (side == 0) {
                for (int cn : var_adj[x]) {
                    if (x == v && cn == c) continue;  // skip the probed edge
                    if (dist_c[cn] < 0) {
                        dist_c[cn] = d + 1;
                        if (cn == c) return d + 1;
                        q.emplace_back(cn, 1);
                    }
                }
            } else {
                for (int vn : check_adj[x]) {
                    if (x == c && vn == v) continue;
                    if (dist_v[vn] < 0) {
                        dist_v[vn] = d + 1;
                        q.emplace_back(vn, 0);
                    }
                }
            }
        }
        (void)nv;
        return std::numeric_limits<int>::max();
    }
};

// All size-k subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

int pick_f1(int factor, int max_mult) {
    const int need = std::max(2, max_mult);
    if (factor % 4 == 0 && 4 >= need) return 4;
    int best = 0;
    for (int d = need; d <= factor; ++d)
        if (factor % d == 0) {
            best = d;
            break;
        }
    return best;  // 0 = no admissible divisor
}

struct F1Edge {
    int check_node;  // i*f1 + cc
    int var_node;    // j*f1 + vc
    int shift = 0;   // stage-2 circulant shift
};

}  // namespace

LiftedCode lift(const BaseMatrix& base, const PunctureMask& punctures, int factor,
                std::uint64_t seed) {
    auto violations = validate_base(base);
    if (!violations.empty())
        throw std::invalid_argument("lift: invalid base matrix: " + violations.front());
    if (static_cast<int>(punctures.punctured.size()) != base.n_vars)
        throw std::invalid_argument("lift: puncture mask size mismatch");
    const int max_mult = base.max_entry();
    if (factor < std::max(2, max_mult))
        throw std::invalid_argument("lift: factor must be >= max multiplicity and >= 2");
    const int f1 = pick_f1(factor, max_mult);
    if (f1 == 0) {
        std::string msg = "lift: factor " + std::to_string(factor) +
                          " has no divisor >= " + std::to_string(std::max(2, max_mult)) +
                          "; nearest valid factors:";
        for (int f = factor - 1; f >= 2; --f)
            if (pick_f1(f, max_mult) != 0) {
                msg += " " + std::to_string(f);
                break;
            }
        for (int f = factor + 1; f <= 4 * factor; ++f)
            if (pick_f1(f, max_mult) != 0) {
                msg += " " + std::to_string(f);
                break;
            }
        throw std::invalid_argument(msg);
    }
    const int f2 = factor / f1;

    // Stage 1: inside each block pick b_ij distinct shifts on the f1 torus,
    // PEG style: prefer the subset whose worst new edge closes the longest
    // cycle in the graph built so far.
    SmallGraph g(base.n_checks, base.n_vars, f1);
    std::vector<F1Edge> edges;
    for (int i = 0; i < base.n_checks; ++i) {
        for (int j = 0; j < base.n_vars; ++j) {
            const int b = base.at(i, j);
            if (b == 0) continue;
            auto cands = subsets(f1, b);
            int best_score = -1;
            std::uint64_t best_tie = 0;
            const std::vector<int>* best = nullptr;
            for (std::size_t ci = 0; ci < cands.size(); ++ci) {
                const auto& sub = cands[ci];
                // score candidate: add its edges, probe each, remove again
                int score = std::numeric_limits<int>::max();
                for (int vc = 0; vc < f1; ++vc)
                    for (int s : sub) g.add(i * f1 + (vc + s) % f1, j * f1 + vc);
                for (int vc = 0; vc < f1 && score > 0; ++vc) {
                    for (int s : sub) {
                        int cc = (vc + s) % f1;
                        int alt = g.alt_path(j * f1 + vc, i * f1 + cc, 12);
                        int cyc = (alt == std::numeric_limits<int>::max())
                                      ? std::numeric_limits<int>::max()
                                      : alt + 1;
                        score = std::min(score, cyc);
                    }
                }
                for (int vc = 0; vc < f1; ++vc)
                    for (int s : sub) {
                        g.var_adj[j * f1 + vc].pop_back();
                        for (int t = 0; t < static_cast<int>(sub.size()); ++t) {
                        }
                    }
                // the push order interleaved var/check adjacency; rebuild check side
                for (int vc = 0; vc < f1; ++vc)
                    for (int s : sub) g.check_adj[i * f1 + (vc + s) % f1].pop_back();
                std::uint64_t tie = derive_seed({seed, static_cast<std::uint64_t>(i),
                                                 static_cast<std::uint64_t>(j), ci});
                if (score > best_score || (score == best_score && tie < best_tie)) {
                    best_score = score;
                    best_tie = tie;
                    best = &cands[ci];
                }
            }
            for (int vc = 0; vc < f1; ++vc)
                for (int s : *best) {
                    int cc = (vc + s) % f1;
                    g.add(i * f1 + cc, j * f1 + vc);
                    edges.push_back({i * f1 + cc, j * f1 + vc, 0});
                }
        }
    }

    // Stage 2: circulant shift per stage-1 edge, greedy over 0..f2-1 keeping
    // the shortest lifted cycle as long as possible; ties take the smallest
    // shift. A base cycle of length 2L with alternating shift sum S lifts to
    // cycles of length 2L * (f2 / gcd(f2, S)).
    if (f2 > 1) {
        // adjacency with edge ids for path enumeration
        std::vector<std::vector<std::pair<int, int>>> vadj(base.n_vars * f1),
            cadj(base.n_checks * f1);
        std::vector<bool> assigned(edges.size(), false);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            vadj[edges[e].var_node].push_back({edges[e].check_node, static_cast<int>(e)});
            cadj[edges[e].check_node].push_back({edges[e].var_node, static_cast<int>(e)});
        }
        const int max_cycle = 8;  // cycles longer than this are left to chance
        for (std::size_t e = 0; e < edges.size(); ++e) {
            // enumerate assigned-only simple paths var->check of odd length
            // <= max_cycle-1 connecting the endpoints of e, excluding e
            std::vector<std::pair<int, int>> cycles;  // (length, alternating sum)
            struct Frame {
                int node;
                int side;  // 0 var, 1 check
                int depth;
                int sum;
            };
            std::vector<int> path_edges;
            std::vector<bool> on_path_v(vadj.size(), false), on_path_c(cadj.size(), false);
            const int v0 = edges[e].var_node, c0 = edges[e].check_node;
            // iterative DFS with explicit recursion
            std::function<void(int, int, int, int)> dfs = [&](int node, int side, int depth,
                                                              int sum) {
                if (depth >= max_cycle) return;
                if (side == 0) {
                    on_path_v[node] = true;
                    for (auto [cn, eid] : vadj[node]) {
                        if (eid == static_cast<int>(e) || !assigned[eid]) continue;
                        if (cn == c0) {
                            cycles.push_back({depth + 2, sum + edges[eid].shift});
                            continue;
                        }
                        if (!on_path_c[cn]) dfs(cn, 1, depth + 1, sum + edges[eid].shift);
                    }
                    on_path_v[node] = false;
                } else {
                    on_path_c[node] = true;
                    for (auto [vn, eid] : cadj[node]) {
                        if (eid == static_cast<int>(e) || !assigned[eid]) continue;
                        if (!on_path_v[vn]) dfs(vn, 0, depth + 1, sum - edges[eid].shift);
                    }
                    on_path_c[node] = false;
                }
            };
            dfs(v0, 0, 0, 0);
            int best_shift = 0;
            long long best_score = -1;
            for (int s = 0; s < f2; ++s) {
                long long score = std::numeric_limits<long long>::max();
                for (auto [len, sum] : cycles) {
                    int total = sum + s;  // e traversed var->check once per cycle
                    int r = ((total % f2) + f2) % f2;
                    int ord = f2 / std::gcd(f2, r == 0 ? f2 : r);
                    if (r == 0) ord = 1;
                    score = std::min(score, static_cast<long long>(len) * ord);
                }
                if (score > best_score) {
                    best_score = score;
                    best_shift = s;
                }
            }
            edges[e].shift = best_shift;
            assigned[e] = true;
        }
    }

    // Expand to the final sparse matrix.
    LiftedCode code;
    code.base = base;
    code.lift_factor = factor;
    code.n = base.n_vars * factor;
    code.m = base.n_checks * factor;
    code.bit_checks.resize(code.n);
    code.check_bits.resize(code.m);
    for (const auto& ed : edges) {
        for (int t = 0; t < f2; ++t) {
            int bit = ed.var_node * f2 + t;
            int chk = ed.check_node * f2 + (t + ed.shift) % f2;
            code.bit_checks[bit].push_back(chk);
            code.check_bits[chk].push_back(bit);
        }
    }
    for (auto& v : code.bit_checks) std::sort(v.begin(), v.end());
    for (auto& v : code.check_bits) std::sort(v.begin(), v.end());
    for (int j = 0; j < base.n_vars; ++j)
        if (punctures.is_punctured(j))
            for (int t = 0; t < factor; ++t) code.punctured_bits.push_back(j * factor + t);
    return code;
}

int girth(const LiftedCode& code) {
    // BFS from every bit node with parent-edge exclusion; every cycle in a
    // bipartite graph passes through a bit node, so this finds the girth.
    int best = std::numeric_limits<int>::max();
    const int nb = code.n, nc = code.m;
    std::vector<int> dist_b(nb), dist_c(nc), par_b(nb), par_c(nc);
    for (int start = 0; start < nb; ++start) {
        std::fill(dist_b.begin(), dist_b.end(), -1);
        std::fill(dist_c.begin(), dist_c.end(), -1);
        std::deque<std::pair<int, int>> q;
        dist_b[start] = 0;
        par_b[start] = -1;
        q.emplace_back(start, 0);
        const int cap = (best == std::numeric_limits<int>::max()) ? nb : best / 2;
        while (!q.empty()) {
            auto [x, side] = q.front();
            q.pop_front();
            int d = side == 0 ? dist_b[x] : dist_c[x];
            if (d >= cap) break;
            if (side == 0) {
                for (int cn : code.bit_checks[x]) {
                    if (cn == par_b[x]) continue;
                    if (dist_c[cn] >= 0) {
                        best = std::min(best, dist_b[x] + dist_c[cn] + 1);
                    } else {
                        dist_c[cn] = d + 1;
                        par_c[cn] = x;
                        q.emplace_back(cn, 1);
                    }
                }
            } else {
                for (int bn : code.check_bits[x]) {
                    if (bn == par_c[x]) continue;
                    if (dist_b[bn] >= 0) {
                        best = std::min(best, dist_c[x] + dist_b[bn] + 1);
                    } else {
                        dist_b[bn] = d + 1;
                        par_b[bn] = x;
                        q.emplace_back(bn, 0);
                    }
                }
            }
        }
    }
    return best == std::numeric_limits<int>::max() ? 0 : best;
}

}  // namespace sasldpc
