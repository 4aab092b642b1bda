// ghostctl - command-line driver for the ghost-series library.
//
// Subcommands:
//   coeff   print one ghost coefficient (degree and zero multiset)
//   np      print a certified Newton polygon at a weight-disk point
//   verify  run a named verification suite over configured sweeps
//
// Conventions shared by every command:
//   * rationals are printed "num/den", infinity as "inf", and parsed back
//     in the same shape;
//   * output goes to stdout or --out FILE, as JSON (default) or long-format
//     CSV with columns series,x,y;
//   * a plain key=value config file (--config) supplies defaults for any
//     option not given on the command line; flags always win;
//   * exit codes: 0 = pass, 1 = mathematical counterexample or stability
//     failure (diagnostic in the JSON report), 2 = usage error;
//   * suites fan out over a worker pool (--workers or GHOST_WORKERS, default
//     hardware concurrency); randomness is drawn up front from --seed, so
//     output is byte-identical for identical flags and seed, and the
//     reported counterexample is the one with the smallest lexicographic
//     key regardless of scheduling.

#include "ghost/delta.hpp"
#include "ghost/mahler.hpp"
#include "ghost/padic.hpp"
#include "ghost/rng.hpp"
#include "ghost/theorems.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using json = nlohmann::json;
using namespace ghost;

namespace {

// ---------- parsing helpers ----------

Rat parse_rat(const std::string& s) {
    if (s == "inf") return Rat::infinity();
    std::size_t slash = s.find('/');
    auto parse_ll = [](const std::string& t) {
        if (t.empty()) throw std::invalid_argument("empty rational component");
        std::size_t pos = 0;
        long long v = std::stoll(t, &pos);
        if (pos != t.size()) throw std::invalid_argument("trailing characters in rational");
        return v;
    };
    try {
        if (slash == std::string::npos) return Rat(parse_ll(s));
        return Rat(parse_ll(s.substr(0, slash)), parse_ll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational '" + s + "' (expect num, num/den, or inf)");
    }
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
    if (out.empty()) throw std::invalid_argument("empty rational list");
    return out;
}

std::vector<long long> parse_ll_list(const std::string& s) {
    std::vector<long long> out;
    for (const Rat& r : parse_rat_list(s)) {
        if (r.is_inf() || !r.is_integer())
            throw std::invalid_argument("expected a comma-separated integer list: " + s);
        out.push_back(r.num().get_si());
    }
    return out;
}

// ---------- config file ----------

std::map<std::string, std::string> load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    auto trim = [](std::string t) {
        std::size_t b = t.find_first_not_of(" \t\r");
        std::size_t e = t.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == '[') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line is not key=value: " + t);
        kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return kv;
}

// config supplies a value only when the flag was not given on the command line
void merge_ll(const CLI::App* cmd, const std::map<std::string, std::string>& kv,
              const std::string& name, long long& var) {
    if (cmd->count("--" + name) > 0) return;
    auto it = kv.find(name);
    if (it == kv.end()) return;
    try {
        std::size_t pos = 0;
        var = std::stoll(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("config value for '" + name + "' is not an integer: " +
                                    it->second);
    }
}

void merge_str(const CLI::App* cmd, const std::map<std::string, std::string>& kv,
               const std::string& name, std::string& var) {
    if (cmd->count("--" + name) > 0) return;
    auto it = kv.find(name);
    if (it != kv.end()) var = it->second;
}

// ---------- output sink ----------

struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open output file " + path);
        os = &file;
    }
    void write(const std::string& s) {
        *os << s;
        os->flush();
    }
};

void emit_json(Sink& sink, const json& j) { sink.write(j.dump(2) + "\n"); }

// ---------- shared options ----------

constexpr long long kUnset = std::numeric_limits<long long>::min();

struct Opts {
    long long p = 7, a = 2, b = 0, seps = -1;  // seps -1 = every character
    std::string format = "json", out, config;

    // command-specific; -1 = unset (may be filled from --config)
    long long n = -1;                      // coeff
    long long center = kUnset, count = -1;  // np
    std::string radius = "inf";            // np
    long long m = 1, mprime = -1, mdprime = 0;  // np: global multiplicities
    bool split = false;

    std::string suite;  // verify
    long long seed = 1, workers = 0;
    long long kmax = -1, nmax = -1, points = 500, pairs = 50, trials = 200;
    long long gm_m = 0, vcount = 5;
    std::string kbs = "50,100,200,400", radii = "1/2,1/3,2/3";
};

std::vector<long long> char_list(const Opts& o) {
    if (o.seps >= 0) return {o.seps};
    std::vector<long long> all;
    for (long long s = 0; s <= o.p - 2; ++s) all.push_back(s);
    return all;
}

// ---------- worker pool ----------

struct Task {
    std::vector<long long> key;       // lexicographic identity of the check
    std::function<json()> fn;         // null json = pass, object = counterexample
};

struct SuiteOutcome {
    long long checked = 0;
    std::optional<std::pair<std::vector<long long>, json>> worst;
};

long long pick_workers(long long flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("GHOST_WORKERS")) {
        long long w = std::atoll(env);
        if (w > 0) return w;
    }
    long long hw = static_cast<long long>(std::thread::hardware_concurrency());
    return hw > 0 ? hw : 1;
}

SuiteOutcome run_tasks(const std::vector<Task>& tasks, long long workers) {
    SuiteOutcome out;
    out.checked = static_cast<long long>(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::vector<std::pair<std::vector<long long>, json>> failures;

    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            json detail;
            try {
                detail = tasks[i].fn();
            } catch (const stability_error& e) {
                detail = json{{"error", "stability_error"}, {"what", e.what()}};
            } catch (const std::exception& e) {
                detail = json{{"error", "exception"}, {"what", e.what()}};
            }
            if (!detail.is_null()) {
                std::lock_guard<std::mutex> lk(mu);
                failures.emplace_back(tasks[i].key, std::move(detail));
            }
        }
    };

    long long w = std::min<long long>(workers, static_cast<long long>(tasks.size()));
    if (w <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(w));
        for (long long i = 0; i < w; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    if (!failures.empty()) {
        std::sort(failures.begin(), failures.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        out.worst = failures.front();
    }
    return out;
}

// ---------- coeff ----------

int cmd_coeff(const Opts& o) {
    if (o.n < 0) throw std::invalid_argument("--n is required (flag or config)");
    GhostContext ctx = GhostContext::make(o.p, o.a, o.b, o.seps < 0 ? 0 : o.seps);
    GhostCoefficient g = ghost_coefficient(ctx, o.n);
    Sink sink(o.out);
    if (o.format == "csv") {
        std::ostringstream csv;
        csv << "series,x,y\n";
        csv << "degree,0," << g.degree << "\n";
        for (const auto& [k, m] : g.zeros) csv << "zero," << k << "," << m << "\n";
        sink.write(csv.str());
        return 0;
    }
    json zeros = json::array();
    for (const auto& [k, m] : g.zeros) zeros.push_back({{"k", k}, {"mult", m}});
    emit_json(sink, json{{"p", ctx.p},
                         {"a", ctx.a},
                         {"b", ctx.b},
                         {"s_eps", ctx.s_eps},
                         {"n", g.n},
                         {"degree", g.degree},
                         {"zeros", zeros}});
    return 0;
}

// ---------- np ----------

std::vector<std::pair<long long, Rat>> clip_vertices(const NewtonPolygon& np, long long xmax) {
    std::vector<std::pair<long long, Rat>> out;
    for (const auto& v : np.vertices)
        if (v.first <= xmax) out.push_back(v);
    if (!out.empty() && out.back().first < xmax) out.emplace_back(xmax, np.value_at(xmax));
    return out;
}

int cmd_np(const Opts& o) {
    if (o.center == kUnset) throw std::invalid_argument("--center is required (flag or config)");
    GhostContext ctx = GhostContext::make(o.p, o.a, o.b, o.seps < 0 ? 0 : o.seps);
    Rat r = parse_rat(o.radius);
    if (!r.is_inf() && !(Rat(0) < r))
        throw std::invalid_argument("radius must be positive or inf");
    if (o.count < 1) throw std::invalid_argument("count must be >= 1 (flag or config)");
    WeightPoint w = r.is_inf() ? WeightPoint::classical(o.center) : WeightPoint::disk(o.center, r);

    long long mprime = o.mprime < 0 ? o.m - o.mdprime : o.mprime;
    bool plain = o.m == 1 && o.mdprime == 0 && !o.split;

    NewtonPolygon np;
    Sink sink(o.out);
    try {
        if (plain) {
            CertifiedNp cert = ghost_np(ctx, w, o.count);
            np = cert.np;
        } else {
            np = global_np(ctx, w, o.m, mprime, o.mdprime, o.split, o.count);
        }
    } catch (const stability_error& e) {
        emit_json(sink, json{{"error", "stability_error"}, {"what", e.what()}});
        return 1;
    }

    std::vector<Rat> slopes = np.first_slopes(o.count);
    std::vector<std::pair<long long, Rat>> verts = clip_vertices(np, o.count);

    if (o.format == "csv") {
        std::ostringstream csv;
        csv << "series,x,y\n";
        for (const auto& [x, y] : verts) csv << "vertex," << x << "," << y.str() << "\n";
        for (std::size_t i = 0; i < slopes.size(); ++i)
            csv << "slope," << i + 1 << "," << slopes[i].str() << "\n";
        sink.write(csv.str());
        return 0;
    }
    json jverts = json::array();
    for (const auto& [x, y] : verts) jverts.push_back(json::array({x, y.str()}));
    json jslopes = json::array();
    for (const Rat& s : slopes) jslopes.push_back(s.str());
    emit_json(sink, json{{"p", ctx.p},
                         {"a", ctx.a},
                         {"b", ctx.b},
                         {"s_eps", ctx.s_eps},
                         {"center", o.center},
                         {"radius", r.str()},
                         {"count", o.count},
                         {"vertices", jverts},
                         {"slopes", jslopes}});
    return 0;
}

// ---------- verify suites ----------

long long bound_or(long long flag, long long dflt) { return flag >= 0 ? flag : dflt; }

// duality: ghost duality at every congruent weight kb <= kmax, per character
std::vector<Task> suite_duality(const Opts& o, json& meta) {
    long long kmax = bound_or(o.kmax, 500);
    meta["kmax"] = kmax;
    std::vector<Task> tasks;
    for (long long s : char_list(o)) {
        GhostContext ctx = GhostContext::make(o.p, o.a, o.b, s);
        for (long long kb = 0; kb <= kmax; ++kb) {
            long long k = ctx.weight_of(kb);
            tasks.push_back({{s, kb}, [ctx, s, kb, k]() -> json {
                                 if (ghost_duality_check(ctx, k)) return json();
                                 return json{{"s_eps", s}, {"kb", kb}, {"k", k}};
                             }});
        }
    }
    return tasks;
}

// vertex <=> not near-Steinberg <=> Vtx-region membership on seeded points
std::vector<Task> suite_vertex(const Opts& o, json& meta) {
    long long points = o.points;
    meta["points"] = points;
    std::vector<Task> tasks;
    Rng rng(static_cast<std::uint64_t>(o.seed));
    for (long long s : char_list(o)) {
        GhostContext ctx = GhostContext::make(o.p, o.a, o.b, s);
        for (long long t = 0; t < points; ++t) {
            long long n = 1 + rng.below(40);
            long long k0 = 2 + rng.below((o.p - 1) * 60);
            bool classical = rng.below(4) == 0;
            Rat r = classical ? Rat::infinity() : Rat(1 + rng.below(12), 1 + rng.below(6));
            WeightPoint w = classical ? WeightPoint::classical(k0) : WeightPoint::disk(k0, r);
            tasks.push_back({{s, t}, [ctx, s, t, n, k0, r, w]() -> json {
                                 DeltaCache cache;
                                 bool v = is_vertex(ctx, w, n);
                                 bool ns = is_near_steinberg(ctx, w, n, &cache);
                                 bool vc = vtx_contains(ctx, w, n, &cache);
                                 if (v == !ns && v == vc) return json();
                                 return json{{"s_eps", s},      {"trial", t},
                                             {"n", n},          {"center", k0},
                                             {"radius", r.str()}, {"is_vertex", v},
                                             {"near_steinberg", ns}, {"vtx_contains", vc}};
                             }});
        }
    }
    return tasks;
}

// gouvea: small-slope bound at every congruent weight kb <= kmax
std::vector<Task> suite_gouvea(const Opts& o, json& meta) {
    long long kmax = bound_or(o.kmax, 300);
    meta["kmax"] = kmax;
    std::vector<Task> tasks;
    for (long long s : char_list(o)) {
        GhostContext ctx = GhostContext::make(o.p, o.a, o.b, s);
        for (long long kb = 0; kb <= kmax; ++kb) {
            long long k = ctx.weight_of(kb);
            tasks.push_back({{s, kb}, [ctx, s, kb, k]() -> json {
                                 GouveaReport rep = gouvea_bound_check(ctx, k);
                                 if (rep.ok) return json();
                                 return json{{"s_eps", s},
                                             {"kb", kb},
                                             {"k", k},
                                             {"slope_bound", rep.slope_bound},
                                             {"floor_bound", rep.floor_bound},
                                             {"max_slope", rep.max_slope.str()}};
                             }});
        }
    }
    return tasks;
}

// gm: seeded weight pairs with v_p(k1-k2) >= m agree up to slope m-4
std::vector<Task> suite_gm(const Opts& o, json& meta) {
    std::vector<long long> ms = o.gm_m > 0 ? std::vector<long long>{o.gm_m}
                                           : std::vector<long long>{4, 5, 6, 7};
    meta["m"] = ms;
    meta["pairs"] = o.pairs;
    std::vector<Task> tasks;
    Rng rng(static_cast<std::uint64_t>(o.seed));
    long long s0 = o.seps < 0 ? 0 : o.seps;
    GhostContext ctx = GhostContext::make(o.p, o.a, o.b, s0);
    for (long long m : ms) {
        long long step = (o.p - 1) * ipow(o.p, m);
        for (long long t = 0; t < o.pairs; ++t) {
            long long k1 = ctx.weight_of(1 + rng.below(150));
            long long j = 1 + rng.below(3);
            long long k2 = rng.coin() && k1 - step * j > m - 3 ? k1 - step * j : k1 + step * j;
            tasks.push_back({{m, t}, [ctx, m, t, k1, k2]() -> json {
                                 GMReport rep = gm_check(ctx, k1, k2, m);
                                 if (rep.ok) return json();
                                 json s1 = json::array(), s2 = json::array();
                                 for (const Rat& x : rep.slopes1) s1.push_back(x.str());
                                 for (const Rat& x : rep.slopes2) s2.push_back(x.str());
                                 return json{{"m", m},   {"trial", t},   {"k1", k1},
                                             {"k2", k2}, {"slopes1", s1}, {"slopes2", s2}};
                             }});
        }
    }
    return tasks;
}

// dist: newform plateau + slack + strictly decreasing Kolmogorov distance
std::vector<Task> suite_dist(const Opts& o, json& meta) {
    std::vector<long long> kbs = parse_ll_list(o.kbs);
    meta["kbs"] = kbs;
    std::vector<Task> tasks;
    for (long long s : char_list(o)) {
        GhostContext ctx = GhostContext::make(o.p, o.a, o.b, s);
        tasks.push_back({{s}, [ctx, s, kbs]() -> json {
                             Rat prev = Rat::infinity();
                             for (long long kb : kbs) {
                                 long long k = ctx.weight_of(kb);
                                 DistReport rep = distribution_check(ctx, k);
                                 if (!rep.ok)
                                     return json{{"s_eps", s},
                                                 {"kb", kb},
                                                 {"middle_ok", rep.middle_ok},
                                                 {"slack_ok", rep.slack_ok},
                                                 {"max_slack", rep.max_slack.str()}};
                                 if (!(rep.kolmogorov < prev))
                                     return json{{"s_eps", s},
                                                 {"kb", kb},
                                                 {"kolmogorov", rep.kolmogorov.str()},
                                                 {"previous", prev.str()},
                                                 {"error", "not strictly decreasing"}};
                                 prev = rep.kolmogorov;
                             }
                             return json();
                         }});
    }
    return tasks;
}

// halo: boundary slopes r * (deg g_n - deg g_{n-1}) at each configured radius
std::vector<Task> suite_halo(const Opts& o, json& meta) {
    long long nmax = bound_or(o.nmax, 50);
    std::vector<Rat> rs = parse_rat_list(o.radii);
    meta["nmax"] = nmax;
    meta["radii"] = json::array();
    for (const Rat& r : rs) meta["radii"].push_back(r.str());
    std::vector<Task> tasks;
    for (long long s : char_list(o)) {
        GhostContext ctx = GhostContext::make(o.p, o.a, o.b, s);
        for (std::size_t i = 0; i < rs.size(); ++i) {
            Rat r = rs[i];
            tasks.push_back({{s, static_cast<long long>(i)}, [ctx, s, r, nmax]() -> json {
                                 if (halo_check(ctx, r, nmax)) return json();
                                 return json{{"s_eps", s}, {"r", r.str()}};
                             }});
        }
    }
    return tasks;
}

// mahler: Y bounds, B integrality, shape of m_n, inverse bounds, sampled values
std::vector<Task> suite_mahler(const Opts& o, json& meta) {
    long long nmax = bound_or(o.nmax, 200);
    meta["nmax"] = nmax;
    std::vector<Task> tasks;
    long long p = o.p;
    for (long long n = 0; n <= nmax; ++n) {
        tasks.push_back({{0, n}, [p, n]() -> json {
                             if (Y_column_check(p, n)) return json();
                             return json{{"check", "Y_column"}, {"n", n}};
                         }});
        tasks.push_back({{1, n}, [p, n]() -> json {
                             std::vector<Rat> B = mahler_B(p, n);
                             for (const Rat& b : B)
                                 if (!b.is_integer())
                                     return json{{"check", "B_integrality"}, {"n", n}};
                             if (!vp_rat(B.back(), p).is_zero())
                                 return json{{"check", "B_unit_diagonal"}, {"n", n}};
                             return json();
                         }});
        tasks.push_back({{2, n}, [p, n]() -> json {
                             RatPoly mn = m_poly(p, n);
                             if (mn.degree() != n)
                                 return json{{"check", "m_degree"}, {"n", n}};
                             long long lead = 0;
                             PDigits d(n, p);
                             for (std::size_t j = 1; j <= d.size(); ++j)
                                 lead -= d.digit(j) * (ipow(p, static_cast<long long>(j)) - 1) /
                                         (p - 1);
                             for (const auto& [e, c] : mn.coeff) {
                                 (void)c;
                                 if ((n - e) % (p - 1) != 0)
                                     return json{{"check", "m_exponent_congruence"},
                                                 {"n", n},
                                                 {"exponent", e}};
                             }
                             if (vp_rat(mn.at(n), p) != Rat(lead))
                                 return json{{"check", "m_leading_valuation"}, {"n", n}};
                             return json();
                         }});
    }
    long long inv = std::min(nmax, 150LL);
    tasks.push_back({{3, 0}, [p, inv]() -> json {
                         if (y_inverse_bound_check(p, inv)) return json();
                         return json{{"check", "y_inverse_bound"}, {"nmax", inv}};
                     }});
    std::uint64_t seed = static_cast<std::uint64_t>(o.seed);
    for (long long n = 1; n <= nmax; n += 13) {
        tasks.push_back({{4, n}, [p, n, seed]() -> json {
                             if (integrality_check(p, n, 4, seed + static_cast<std::uint64_t>(n)))
                                 return json();
                             return json{{"check", "value_integrality"}, {"n", n}};
                         }});
    }
    return tasks;
}

// delta: table invariants and the hull-gap inequalities per congruent weight
std::vector<Task> suite_delta(const Opts& o, json& meta) {
    long long kmax = bound_or(o.kmax, 200);
    meta["kmax"] = kmax;
    std::vector<Task> tasks;
    for (long long s : char_list(o)) {
        GhostContext ctx = GhostContext::make(o.p, o.a, o.b, s);
        for (long long kb = 0; kb <= kmax; ++kb) {
            long long k = ctx.weight_of(kb);
            tasks.push_back({{s, kb}, [ctx, s, kb, k]() -> json {
                                 DeltaTable tab = delta_table(ctx, k);
                                 long long h = tab.half_new;
                                 for (long long l = -h; l <= h; ++l) {
                                     if (tab.dp(l) != tab.dp(-l) || tab.d(l) != tab.d(-l))
                                         return json{{"s_eps", s}, {"kb", kb},
                                                     {"error", "symmetry"}, {"l", l}};
                                     if (tab.d(l) > tab.dp(l))
                                         return json{{"s_eps", s}, {"kb", kb},
                                                     {"error", "hull above profile"}, {"l", l}};
                                 }
                                 for (long long L = 2; L <= h; ++L)
                                     if (tab.gap(L) < tab.gap(L - 1))
                                         return json{{"s_eps", s}, {"kb", kb},
                                                     {"error", "convexity"}, {"L", L}};
                                 DeltaGapReport rep = delta_gap_check(ctx, k);
                                 if (!rep.ok)
                                     return json{{"s_eps", s},  {"kb", kb},
                                                 {"error", "gap inequality"}, {"l", rep.l},
                                                 {"lprime", rep.lp}, {"ldprime", rep.lpp}};
                                 return json();
                             }});
        }
    }
    return tasks;
}

// harmonic: V+ + sum_alpha V^alpha = 0 on seeded (n, k0, mu)
std::vector<Task> suite_harmonic(const Opts& o, json& meta) {
    meta["trials"] = o.trials;
    std::vector<Task> tasks;
    Rng rng(static_cast<std::uint64_t>(o.seed));
    for (long long s : char_list(o)) {
        GhostContext ctx = GhostContext::make(o.p, o.a, o.b, s);
        for (long long t = 0; t < o.trials; ++t) {
            long long n = 1 + rng.below(50);
            long long k0 = 2 + rng.below((o.p - 1) * 50);
            Rat mu(1 + rng.below(12), 1 + rng.below(4));
            tasks.push_back({{s, t}, [ctx, s, t, n, k0, mu]() -> json {
                                 if (harmonicity_check(ctx, n, k0, mu)) return json();
                                 return json{{"s_eps", s}, {"trial", t}, {"n", n},
                                             {"k0", k0},   {"mu", mu.str()}};
                             }});
        }
    }
    return tasks;
}

// al-theta-pstab: slope identities under theta twist, Atkin-Lehner, p-stabilization
std::vector<Task> suite_altp(const Opts& o, json& meta) {
    long long kmax = bound_or(o.kmax, 100);
    long long count = o.vcount;
    meta["kmax"] = kmax;
    meta["count"] = count;
    std::vector<Task> tasks;
    long long ktop = 2 + (o.p - 1) * kmax;
    for (long long s : char_list(o)) {
        GhostContext ctx = GhostContext::make(o.p, o.a, o.b, s);
        for (long long k0 = 2; k0 <= ktop; ++k0) {
            tasks.push_back({{s, k0}, [ctx, s, k0, count]() -> json {
                                 if (!al_involution_check(ctx, k0))
                                     return json{{"s_eps", s}, {"k0", k0},
                                                 {"error", "al matrix degree pairing"}};
                                 if (!theta_check(ctx, k0, count))
                                     return json{{"s_eps", s}, {"k0", k0},
                                                 {"error", "theta slope shift"}};
                                 if (ctx.congruent_weight(k0)) {
                                     if (!pstab_check(ctx, k0, 1LL << 40))
                                         return json{{"s_eps", s}, {"k0", k0},
                                                     {"error", "p-stabilization pairing"}};
                                 } else if (!al_check(ctx, k0, 1LL << 40)) {
                                     return json{{"s_eps", s}, {"k0", k0},
                                                 {"error", "atkin-lehner pairing"}};
                                 }
                                 return json();
                             }});
        }
    }
    return tasks;
}

// corank: minor bound triple vs a quadratic set-scan oracle, plus the
// full-window multiplicity identity
std::vector<Task> suite_corank(const Opts& o, json& meta) {
    meta["trials"] = o.trials;
    std::vector<Task> tasks;
    Rng rng(static_cast<std::uint64_t>(o.seed));
    for (long long s : char_list(o)) {
        GhostContext ctx = GhostContext::make(o.p, o.a, o.b, s);
        for (long long t = 0; t < o.trials; ++t) {
            long long k = ctx.weight_of(1 + rng.below(60));
            long long n = 1 + rng.below(30);
            long long universe = n + rng.below(25);
            auto draw_set = [&]() {
                std::set<long long> sset;
                while (static_cast<long long>(sset.size()) < n)
                    sset.insert(1 + rng.below(universe));
                return IndexSet(sset.begin(), sset.end());
            };
            IndexSet zeta = draw_set(), xi = draw_set();
            tasks.push_back({{s, t}, [ctx, s, t, k, n, zeta, xi]() -> json {
                                 CorankBound cb = corank_bound(ctx, zeta, xi, k);
                                 long long diw = d_iw(ctx, k), dur = d_ur(ctx, k);
                                 long long r = 0, sc = 0;
                                 for (long long i : xi) {
                                     if (i > diw) ++sc;
                                     else
                                         for (long long j : zeta)
                                             if (j == diw + 1 - i) ++r;
                                 }
                                 long long m = n - dur - r - sc;
                                 if (cb.r != r || cb.s != sc || cb.m != m)
                                     return json{{"s_eps", s}, {"trial", t}, {"k", k},
                                                 {"r", cb.r},  {"s", cb.s},  {"m", cb.m},
                                                 {"oracle_r", r}, {"oracle_s", sc},
                                                 {"oracle_m", m}};
                                 IndexSet full;
                                 for (long long i = 1; i <= n; ++i) full.push_back(i);
                                 CorankBound fb = corank_bound(ctx, full, full, k);
                                 if (std::max(0LL, fb.m) != multiplicity(ctx, n, k))
                                     return json{{"s_eps", s}, {"trial", t}, {"k", k},
                                                 {"n", n}, {"error", "full-window multiplicity"}};
                                 return json();
                             }});
        }
    }
    return tasks;
}

int cmd_verify(const Opts& o) {
    using Builder = std::vector<Task> (*)(const Opts&, json&);
    static const std::map<std::string, Builder> suites = {
        {"duality", suite_duality}, {"vertex", suite_vertex},
        {"gouvea", suite_gouvea},   {"gm", suite_gm},
        {"dist", suite_dist},       {"halo", suite_halo},
        {"mahler", suite_mahler},   {"delta", suite_delta},
        {"harmonic", suite_harmonic}, {"al-theta-pstab", suite_altp},
        {"corank", suite_corank}};

    auto it = suites.find(o.suite);
    if (it == suites.end())
        throw CLI::ValidationError("verify", "unknown suite '" + o.suite + "'");

    if (!GhostContext::make(o.p, o.a, o.b, o.seps < 0 ? 0 : o.seps).very_generic)
        std::cerr << "note: datum (p=" << o.p << ", a=" << o.a
                  << ") is outside the very-generic range (p >= 11, 2 <= a <= p-5); "
                     "checks still run\n";

    json meta{{"suite", o.suite}, {"p", o.p},       {"a", o.a},
              {"b", o.b},         {"s_eps", o.seps}, {"seed", o.seed}};
    std::vector<Task> tasks = it->second(o, meta);
    SuiteOutcome out = run_tasks(tasks, pick_workers(o.workers));

    meta["checked"] = out.checked;
    Sink sink(o.out);
    if (!out.worst) {
        meta["status"] = "pass";
        emit_json(sink, meta);
        return 0;
    }
    meta["status"] = "fail";
    meta["counterexample"] = json{{"key", out.worst->first}, {"detail", out.worst->second}};
    emit_json(sink, meta);
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ghostctl - exact ghost series, Newton polygons, and slope theorem checks"};
    app.require_subcommand(1);
    Opts o;

    auto add_shared = [&](CLI::App* cmd) {
        cmd->add_option("--p", o.p, "prime (>= 7)");
        cmd->add_option("--a", o.a, "weight of the Serre datum, 1 <= a <= p-4");
        cmd->add_option("--b", o.b, "twist of the Serre datum");
        cmd->add_option("--seps", o.seps, "character index s_eps; -1 = every character");
        cmd->add_option("--format", o.format, "output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", o.out, "write output to FILE instead of stdout");
        cmd->add_option("--config", o.config, "plain key=value config file merged under flags");
    };

    CLI::App* coeff = app.add_subcommand("coeff", "ghost coefficient g_n: degree and zeros");
    add_shared(coeff);
    coeff->add_option("--n", o.n, "coefficient index");

    CLI::App* np = app.add_subcommand("np", "certified Newton polygon at a weight point");
    add_shared(np);
    np->add_option("--center", o.center, "center weight k0 of the point");
    np->add_option("--radius", o.radius, "disk radius as a rational, or inf for the classical point");
    np->add_option("--count", o.count, "number of certified slopes");
    np->add_option("--m", o.m, "total multiplicity (polygon stretch)");
    np->add_option("--mprime", o.mprime, "split multiplicity m' (default m - m'')");
    np->add_option("--mdprime", o.mdprime, "split multiplicity m''");
    np->add_flag("--split", o.split, "treat the datum as split (requires m = m' + m'')");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    add_shared(verify);
    verify
        ->add_option("suite", o.suite,
                     "one of: duality, vertex, gouvea, gm, dist, halo, mahler, delta, "
                     "harmonic, al-theta-pstab, corank")
        ->required();
    verify->add_option("--seed", o.seed, "seed for all randomized draws");
    verify->add_option("--workers", o.workers, "worker threads (0 = GHOST_WORKERS or hardware)");
    verify->add_option("--kmax", o.kmax, "weight sweep bound (k-bullet scale)");
    verify->add_option("--nmax", o.nmax, "index sweep bound");
    verify->add_option("--count", o.vcount, "certified slopes per theta check");
    verify->add_option("--points", o.points, "seeded points per character (vertex)");
    verify->add_option("--pairs", o.pairs, "seeded pairs per m (gm)");
    verify->add_option("--trials", o.trials, "seeded trials per character (harmonic, corank)");
    verify->add_option("--m", o.gm_m, "single Gouvea-Mazur radius m (default sweep 4..7)");
    verify->add_option("--kbs", o.kbs, "comma list of k-bullet values (dist)");
    verify->add_option("--radii", o.radii, "comma list of boundary radii (halo)");

    try {
        app.parse(argc, argv);

        CLI::App* active = coeff->parsed() ? coeff : np->parsed() ? np : verify;
        if (active->count("--config") > 0 || !o.config.empty()) {
            auto kv = load_config(o.config);
            merge_ll(active, kv, "p", o.p);
            merge_ll(active, kv, "a", o.a);
            merge_ll(active, kv, "b", o.b);
            merge_ll(active, kv, "seps", o.seps);
            merge_str(active, kv, "format", o.format);
            merge_str(active, kv, "out", o.out);
            if (active == coeff) merge_ll(active, kv, "n", o.n);
            if (active == np) {
                merge_ll(active, kv, "center", o.center);
                merge_str(active, kv, "radius", o.radius);
                merge_ll(active, kv, "count", o.count);
                merge_ll(active, kv, "m", o.m);
                merge_ll(active, kv, "mprime", o.mprime);
                merge_ll(active, kv, "mdprime", o.mdprime);
            }
            if (active == verify) {
                merge_ll(active, kv, "seed", o.seed);
                merge_ll(active, kv, "workers", o.workers);
                merge_ll(active, kv, "kmax", o.kmax);
                merge_ll(active, kv, "nmax", o.nmax);
                merge_ll(active, kv, "count", o.vcount);
                merge_ll(active, kv, "points", o.points);
                merge_ll(active, kv, "pairs", o.pairs);
                merge_ll(active, kv, "trials", o.trials);
                merge_ll(active, kv, "m", o.gm_m);
                merge_str(active, kv, "kbs", o.kbs);
                merge_str(active, kv, "radii", o.radii);
            }
            if (o.format != "json" && o.format != "csv")
                throw std::invalid_argument("format must be json or csv");
        }

        if (coeff->parsed()) return cmd_coeff(o);
        if (np->parsed()) return cmd_np(o);
        return cmd_verify(o);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const stability_error& e) {
        std::cerr << "stability failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
