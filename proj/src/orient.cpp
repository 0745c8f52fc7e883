#include "flowforge/orient.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <set>
#include <thread>

namespace flowforge {

bool BoundaryFunction::zero_sum() const {
    long sum = 0;
    for (int v : values) sum += v;
    return sum % modulus == 0;
}

std::vector<int> boundary(const Multigraph& g, const Orientation& d) {
    if (static_cast<int>(d.edges.size()) != g.edge_count()) throw IncompleteOrientation();
    std::vector<int> out(g.vertex_count(), 0);
    for (int id = 0; id < g.edge_count(); ++id) {
        auto [tail, head] = d.edges[id];
        const Edge& e = g.edges()[id];
        bool matches = (tail == e.u && head == e.v) || (tail == e.v && head == e.u);
        if (!matches || tail == head) throw IncompleteOrientation();
        ++out[tail];
        --out[head];
    }
    return out;
}

int tau_abs(int beta_a, int d_a) {
    int b = ((beta_a % 3) + 3) % 3;
    bool odd = (d_a % 2) != 0;
    if (b == 0) return odd ? 3 : 0;
    return odd ? 1 : 2;
}

int worker_threads() {
    if (const char* env = std::getenv("FLOWFORGE_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// ---------------------------------------------------------------------------
// frontier DP

struct OrientationSolver::Impl {
    struct Event {
        enum Kind : uint8_t { EdgeStep, Retire } kind;
        int edge = -1;          // EdgeStep
        int slot_a = -1, slot_b = -1;
        int end_a = -1, end_b = -1;
        int forced = -1;        // -1 free, 0 = end_a tail, 1 = end_b tail
        int vertex = -1;        // Retire
        int slot = -1;
    };

    Multigraph g;
    int modulus;
    int width = 0;
    size_t states = 1;
    std::vector<Event> events;
    std::vector<size_t> pow;                 // modulus^slot
    std::vector<std::vector<int32_t>> inc;   // per slot: +1 on that digit
    std::vector<std::vector<int32_t>> dec;

    // scratch
    std::vector<uint8_t> cur, nxt;

    Impl(const Multigraph& graph, int m, const std::optional<PreOrientation>& fixed)
        : g(graph), modulus(m) {
        if (m < 2) throw BadModulus(m);
        std::vector<int> forced_dir(g.edge_count(), -1);
        if (fixed) {
            g.check_vertex(fixed->z0);
            std::set<int> covered;
            for (auto [id, out] : fixed->dirs) {
                const Edge& e = g.edge(id);
                if (!e.touches(fixed->z0))
                    throw PreOrientationMismatch("pre-oriented edge not incident to z0");
                if (!covered.insert(id).second)
                    throw PreOrientationMismatch("edge pre-oriented twice");
                bool z0_is_u = (e.u == fixed->z0);
                forced_dir[id] = (out == z0_is_u) ? 0 : 1;
            }
            for (int id : g.incident(fixed->z0))
                if (!covered.count(id))
                    throw PreOrientationMismatch("pre-orientation must cover all of E(z0)");
        }
        build_schedule(forced_dir);
        pow.resize(width + 1);
        pow[0] = 1;
        for (int i = 0; i < width; ++i) pow[i + 1] = pow[i] * modulus;
        states = pow[width];
        inc.assign(width, std::vector<int32_t>(states));
        dec.assign(width, std::vector<int32_t>(states));
        for (int k = 0; k < width; ++k) {
            for (size_t s = 0; s < states; ++s) {
                int digit = static_cast<int>((s / pow[k]) % modulus);
                int up = (digit + 1) % modulus;
                int down = (digit + modulus - 1) % modulus;
                inc[k][s] = static_cast<int32_t>(s + (up - digit) * static_cast<long>(pow[k]));
                dec[k][s] = static_cast<int32_t>(s + (down - digit) * static_cast<long>(pow[k]));
            }
        }
    }

    void build_schedule(const std::vector<int>& forced_dir) {
        int n = g.vertex_count();
        std::vector<int> order = elimination_order();
        std::vector<int> pos(n);
        for (int p = 0; p < n; ++p) pos[order[p]] = p;

        std::vector<int> last_pos(n);
        for (int v = 0; v < n; ++v) {
            last_pos[v] = pos[v];
            for (int id : g.incident(v))
                last_pos[v] = std::max(last_pos[v], pos[g.edges()[id].other(v)]);
        }

        std::vector<int> slot(n, -1);
        std::vector<char> free_slot;
        auto take_slot = [&](int v) {
            for (size_t k = 0; k < free_slot.size(); ++k) {
                if (free_slot[k]) {
                    free_slot[k] = 0;
                    slot[v] = static_cast<int>(k);
                    return;
                }
            }
            free_slot.push_back(0);
            slot[v] = static_cast<int>(free_slot.size()) - 1;
        };

        for (int p = 0; p < n; ++p) {
            int v = order[p];
            take_slot(v);
            width = std::max(width, static_cast<int>(free_slot.size()));
            std::vector<int> ids;
            for (int id : g.incident(v))
                if (pos[g.edges()[id].other(v)] < p) ids.push_back(id);
            std::sort(ids.begin(), ids.end());
            for (int id : ids) {
                const Edge& e = g.edges()[id];
                Event ev;
                ev.kind = Event::EdgeStep;
                ev.edge = id;
                ev.end_a = e.u;
                ev.end_b = e.v;
                ev.slot_a = slot[e.u];
                ev.slot_b = slot[e.v];
                ev.forced = forced_dir[id];
                events.push_back(ev);
            }
            for (int u = 0; u < n; ++u) {
                if (last_pos[u] == p) {
                    Event ev;
                    ev.kind = Event::Retire;
                    ev.vertex = u;
                    ev.slot = slot[u];
                    events.push_back(ev);
                    free_slot[slot[u]] = 1;
                }
            }
        }
    }

    // greedy order keeping the set of active vertices small
    std::vector<int> elimination_order() const {
        int n = g.vertex_count();
        std::vector<std::vector<int>> nbr(n);
        for (const Edge& e : g.edges()) {
            nbr[e.u].push_back(e.v);
            nbr[e.v].push_back(e.u);
        }
        for (auto& a : nbr) {
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
        }
        std::vector<char> placed(n, 0);
        std::vector<int> order;
        order.reserve(n);
        for (int step = 0; step < n; ++step) {
            int best = -1, best_width = 0, best_back = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                placed[v] = 1;
                int w = 0;
                for (int x = 0; x < n; ++x) {
                    if (!placed[x]) continue;
                    bool open = false;
                    for (int y : nbr[x])
                        if (!placed[y]) {
                            open = true;
                            break;
                        }
                    if (open) ++w;
                }
                placed[v] = 0;
                int back = 0;
                for (int y : nbr[v])
                    if (placed[y]) ++back;
                if (best < 0 || w < best_width || (w == best_width && back > best_back)) {
                    best = v;
                    best_width = w;
                    best_back = back;
                }
            }
            placed[best] = 1;
            order.push_back(best);
        }
        return order;
    }

    std::vector<int> normalize(std::span<const int> beta) const {
        if (static_cast<int>(beta.size()) != g.vertex_count())
            throw Error("boundary function size does not match vertex count");
        std::vector<int> b(beta.size());
        for (size_t i = 0; i < beta.size(); ++i)
            b[i] = ((beta[i] % modulus) + modulus) % modulus;
        return b;
    }

    bool exists(std::span<const int> beta) {
        auto b = normalize(beta);
        cur.assign(states, 0);
        nxt.resize(states);
        cur[0] = 1;
        for (const Event& ev : events) {
            std::memset(nxt.data(), 0, states);
            bool any = false;
            if (ev.kind == Event::EdgeStep) {
                const auto& ia = inc[ev.slot_a];
                const auto& da = dec[ev.slot_a];
                const auto& ib = inc[ev.slot_b];
                const auto& db = dec[ev.slot_b];
                for (size_t s = 0; s < states; ++s) {
                    if (!cur[s]) continue;
                    any = true;
                    if (ev.forced != 1) nxt[db[ia[s]]] = 1;  // end_a -> end_b
                    if (ev.forced != 0) nxt[ib[da[s]]] = 1;  // end_b -> end_a
                }
            } else {
                int need = b[ev.vertex];
                size_t p = pow[ev.slot];
                for (size_t s = 0; s < states; ++s) {
                    if (!cur[s]) continue;
                    if (static_cast<int>((s / p) % modulus) == need) {
                        nxt[s - static_cast<size_t>(need) * p] = 1;
                        any = true;
                    }
                }
                if (!any) return false;
            }
            if (!any) return false;
            std::swap(cur, nxt);
        }
        return cur[0] != 0;
    }

    std::optional<Orientation> solve(std::span<const int> beta) {
        auto b = normalize(beta);
        size_t L = events.size();
        std::vector<std::vector<int32_t>> from(L);
        std::vector<std::vector<int8_t>> choice(L);
        std::vector<int32_t> layer_states;
        // forward pass, remembering one parent per state per layer
        std::vector<int32_t> state_list{0};
        for (size_t li = 0; li < L; ++li) {
            const Event& ev = events[li];
            from[li].assign(states, -1);
            choice[li].assign(states, -1);
            layer_states.clear();
            if (ev.kind == Event::EdgeStep) {
                for (int32_t s : state_list) {
                    if (ev.forced != 1) {
                        int32_t t = dec[ev.slot_b][inc[ev.slot_a][s]];
                        if (from[li][t] < 0) {
                            from[li][t] = s;
                            choice[li][t] = 0;
                            layer_states.push_back(t);
                        }
                    }
                    if (ev.forced != 0) {
                        int32_t t = inc[ev.slot_b][dec[ev.slot_a][s]];
                        if (from[li][t] < 0) {
                            from[li][t] = s;
                            choice[li][t] = 1;
                            layer_states.push_back(t);
                        }
                    }
                }
            } else {
                int need = b[ev.vertex];
                size_t p = pow[ev.slot];
                for (int32_t s : state_list) {
                    if (static_cast<int>((static_cast<size_t>(s) / p) % modulus) == need) {
                        int32_t t = s - static_cast<int32_t>(static_cast<size_t>(need) * p);
                        if (from[li][t] < 0) {
                            from[li][t] = s;
                            layer_states.push_back(t);
                        }
                    }
                }
            }
            if (layer_states.empty()) return std::nullopt;
            state_list = layer_states;
        }
        if (L == 0 || from[L - 1][0] < 0) {
            // no events only for the empty graph
            if (L == 0) return Orientation{};
            return std::nullopt;
        }
        Orientation d;
        d.edges.assign(g.edge_count(), {-1, -1});
        int32_t s = 0;
        for (size_t li = L; li-- > 0;) {
            const Event& ev = events[li];
            if (ev.kind == Event::EdgeStep) {
                if (choice[li][s] == 0)
                    d.edges[ev.edge] = {ev.end_a, ev.end_b};
                else
                    d.edges[ev.edge] = {ev.end_b, ev.end_a};
            }
            s = from[li][s];
        }
        return d;
    }
};

OrientationSolver::OrientationSolver(const Multigraph& g, int modulus,
                                     std::optional<PreOrientation> fixed)
    : impl_(std::make_unique<Impl>(g, modulus, fixed)) {}
OrientationSolver::~OrientationSolver() = default;
OrientationSolver::OrientationSolver(OrientationSolver&&) noexcept = default;
OrientationSolver& OrientationSolver::operator=(OrientationSolver&&) noexcept = default;

bool OrientationSolver::exists(std::span<const int> beta) { return impl_->exists(beta); }
std::optional<Orientation> OrientationSolver::solve(std::span<const int> beta) {
    return impl_->solve(beta);
}
int OrientationSolver::frontier_width() const { return impl_->width; }

// ---------------------------------------------------------------------------

namespace {

void check_modulus(int m) {
    if (m < 3 || m % 2 == 0) throw BadModulus(m);
}

int pre_orientation_net(const PreOrientation& pre) {
    int net = 0;
    for (auto [id, out] : pre.dirs) {
        (void)id;
        net += out ? 1 : -1;
    }
    return net;
}

}  // namespace

std::optional<Orientation> find_beta_orientation(const Multigraph& g,
                                                 const BoundaryFunction& beta,
                                                 std::optional<PreOrientation> fixed) {
    check_modulus(beta.modulus);
    if (static_cast<int>(beta.values.size()) != g.vertex_count())
        throw Error("boundary function size does not match vertex count");
    if (!beta.zero_sum()) throw NotZeroSum();
    if (fixed) {
        g.check_vertex(fixed->z0);
        int net = pre_orientation_net(*fixed);
        int want = beta.values[fixed->z0];
        if (((net % beta.modulus) + beta.modulus) % beta.modulus != ((want % beta.modulus) + beta.modulus) % beta.modulus)
            throw PreOrientationMismatch("pre-orientation net flow must match beta(z0)");
    }
    OrientationSolver solver(g, beta.modulus, std::move(fixed));
    return solver.solve(beta.values);
}

std::optional<Orientation> has_mod_orientation(const Multigraph& g, int m) {
    check_modulus(m);
    BoundaryFunction zero{m, std::vector<int>(g.vertex_count(), 0)};
    OrientationSolver solver(g, m);
    return solver.solve(zero.values);
}

namespace {

// lex sweep over all zero-sum boundary functions mod m; returns the first
// index with no orientation, or nullopt
std::optional<unsigned long long> first_failing_index(const Multigraph& g, int m) {
    int n = g.vertex_count();
    if (n <= 1) return std::nullopt;
    unsigned long long total = 1;
    for (int i = 0; i < n - 1; ++i) {
        if (total > (1ull << 62) / static_cast<unsigned>(m))
            throw BudgetExceeded("boundary sweep too large");
        total *= static_cast<unsigned>(m);
    }
    auto decode = [&](unsigned long long idx, std::vector<int>& beta) {
        long sum = 0;
        unsigned long long rest = idx;
        for (int i = n - 2; i >= 0; --i) {
            beta[i] = static_cast<int>(rest % m);
            sum += beta[i];
            rest /= m;
        }
        beta[n - 1] = static_cast<int>((m - sum % m) % m);
    };

    const unsigned long long chunk = 256;
    std::atomic<unsigned long long> next{0};
    std::atomic<unsigned long long> best{total};
    int threads = std::min<unsigned long long>(worker_threads(), (total + chunk - 1) / chunk);
    auto work = [&]() {
        OrientationSolver solver(g, m);
        std::vector<int> beta(n);
        while (true) {
            unsigned long long start = next.fetch_add(chunk);
            if (start >= total || start >= best.load()) break;
            unsigned long long end = std::min(start + chunk, total);
            for (unsigned long long i = start; i < end; ++i) {
                if (i >= best.load()) break;
                decode(i, beta);
                if (!solver.exists(beta)) {
                    unsigned long long cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    break;
                }
            }
        }
    };
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    unsigned long long found = best.load();
    if (found == total) return std::nullopt;
    return found;
}

GroupConnectivityVerdict sweep(const Multigraph& g, int m) {
    auto idx = first_failing_index(g, m);
    if (!idx) return {true, std::nullopt};
    int n = g.vertex_count();
    std::vector<int> beta(n);
    long sum = 0;
    unsigned long long rest = *idx;
    for (int i = n - 2; i >= 0; --i) {
        beta[i] = static_cast<int>(rest % m);
        sum += beta[i];
        rest /= m;
    }
    beta[n - 1] = static_cast<int>((m - sum % m) % m);
    return {false, std::move(beta)};
}

}  // namespace

GroupConnectivityVerdict is_z3_connected(const Multigraph& g) { return sweep(g, 3); }

GroupConnectivityVerdict is_strongly_zm_connected(const Multigraph& g, int m) {
    check_modulus(m);
    return sweep(g, m);
}

bool is_extendable_at(const Multigraph& g, int z0) {
    g.check_vertex(z0);
    if (g.vertex_count() < 2) throw TooSmall("extendability needs at least 2 vertices");
    auto del = delete_vertex(g, z0);
    return is_z3_connected(del.graph).value;
}

LtwzResult ltwz_conditions(const Multigraph& g, int z0, const BoundaryFunction& beta,
                           const PreOrientation& pre) {
    check_modulus(beta.modulus);
    if (beta.modulus != 3) throw BadModulus(beta.modulus);
    g.check_vertex(z0);
    if (static_cast<int>(beta.values.size()) != g.vertex_count())
        throw Error("boundary function size does not match vertex count");
    if (!beta.zero_sum()) throw NotZeroSum();

    int n = g.vertex_count();
    if (n < 3) return {false, 1, std::nullopt};

    int dz = g.degree(z0);
    if (dz > 4 + tau_abs(beta.values[z0], dz)) return {false, 2, std::nullopt};
    int net = pre_orientation_net(pre);
    if (((net % 3) + 3) % 3 != beta.values[z0] % 3) return {false, 2, std::nullopt};

    std::vector<int> others;
    for (int v = 0; v < n; ++v)
        if (v != z0) others.push_back(v);
    int nn = static_cast<int>(others.size());
    for (unsigned long long mask = 1; mask < (1ull << nn); ++mask) {
        int size = __builtin_popcountll(mask);
        if (n - size < 2) continue;
        std::vector<char> in(n, 0);
        int beta_sum = 0;
        for (int i = 0; i < nn; ++i) {
            if (mask & (1ull << i)) {
                in[others[i]] = 1;
                beta_sum += beta.values[others[i]];
            }
        }
        int cut = 0;
        for (const Edge& e : g.edges())
            if (in[e.u] != in[e.v]) ++cut;
        if (cut < 4 + tau_abs(beta_sum, cut)) {
            std::vector<int> a;
            for (int v = 0; v < n; ++v)
                if (in[v]) a.push_back(v);
            return {false, 3, std::move(a)};
        }
    }
    return {true, 0, std::nullopt};
}

}  // namespace flowforge
