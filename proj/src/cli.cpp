#include "biform/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "biform/arith.hpp"
#include "biform/asymfit.hpp"
#include "biform/boxes.hpp"
#include "biform/conic.hpp"
#include "biform/counting.hpp"
#include "biform/errors.hpp"
#include "biform/param.hpp"
#include "biform/projective.hpp"
#include "biform/rng.hpp"

namespace biform::cli {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

i64 default_sieve_limit(const RunConfig& cfg) {
    if (cfg.sieve_limit > 0) return cfg.sieve_limit;
    if (const char* env = std::getenv("BIFORM_SIEVE_LIMIT")) {
        i64 v = std::atoll(env);
        if (v > 0) return v;
    }
    return FactorSieve::kDefaultLimit;
}

// Table sink: CSV with a versioned comment header, or a JSON document.
class Table {
public:
    Table(const RunConfig& cfg, std::vector<std::string> columns)
        : cfg_(cfg), columns_(std::move(columns)) {
        doc_["tool"] = "biform-counter";
        doc_["version"] = 1;
        doc_["command"] = cfg.command;
        doc_["seed"] = cfg.seed;
        doc_["rng"] = "splitmix64";
        doc_["rows"] = json::array();
    }

    void add_row(const json& row) { doc_["rows"].push_back(row); }
    void add_note(const std::string& key, const json& value) { doc_[key] = value; }

    int write(const RunConfig& cfg) const {
        std::ostream* out = &std::cout;
        std::ofstream file;
        if (cfg.output_path != "-") {
            file.open(cfg.output_path);
            if (!file) {
                std::cerr << "biform-counter: cannot open output file " << cfg.output_path << "\n";
                return kUsage;
            }
            out = &file;
        }
        if (cfg.format == "json") {
            *out << doc_.dump(2) << "\n";
        } else {
            *out << "# biform-counter v1, command=" << cfg.command << ", seed=" << cfg.seed
                 << ", rng=splitmix64, shards=" << cfg.shards << ", eps=" << fmt_double(cfg.eps) << "\n";
            *out << join(columns_) << "\n";
            for (const auto& row : doc_["rows"]) {
                std::vector<std::string> cells;
                cells.reserve(columns_.size());
                for (const auto& col : columns_) {
                    const auto& v = row.at(col);
                    if (v.is_string()) cells.push_back(v.get<std::string>());
                    else if (v.is_number_float()) cells.push_back(fmt_double(v.get<double>()));
                    else cells.push_back(v.dump());
                }
                *out << join(cells) << "\n";
            }
            for (const auto& [key, value] : doc_.items()) {
                if (key == "rows" || key == "tool" || key == "version" || key == "command" ||
                    key == "seed" || key == "rng") continue;
                *out << "# " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
        }
        return kOk;
    }

private:
    static std::string join(const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) line += ",";
            line += cells[i];
        }
        return line;
    }

    const RunConfig& cfg_;
    std::vector<std::string> columns_;
    json doc_;
};

json record_row(const CountRecord& rec, bool zero_elapsed) {
    return json{{"B", rec.B},
                {"method", rec.method},
                {"count", rec.count},
                {"elapsed_s", zero_elapsed ? 0.0 : rec.elapsed},
                {"shards", rec.shards}};
}

// ---------------------------------------------------------------------------

int cmd_count(const RunConfig& cfg) {
    FactorSieve sieve(std::min<i64>(std::max<i64>(default_sieve_limit(cfg), 2), kFiberBoundGuard));
    CountMethod method = method_from_name(cfg.method);
    if (method == CountMethod::fiber && cfg.bound > sieve.limit() && cfg.bound <= kFiberBoundGuard) {
        sieve.grow(cfg.bound);
    }
    CountRecord rec = count_total(cfg.bound, method, cfg.shards, sieve);
    Table table(cfg, {"B", "method", "count", "elapsed_s", "shards"});
    table.add_row(record_row(rec, cfg.zero_elapsed));
    return table.write(cfg);
}

int cmd_verify_bijection(const RunConfig& cfg) {
    if (cfg.bmax < 4) {
        std::cerr << "biform-counter: --bmax must be at least 4\n";
        return kUsage;
    }
    if (cfg.bmax > kTupleBoundGuard) {
        std::cerr << "biform-counter: --bmax exceeds the tuple enumeration guard\n";
        return kResourceGuard;
    }
    std::vector<i64> grid;
    for (i64 b = 4; b <= cfg.bmax; b *= 2) grid.push_back(b);
    for (i64 b = 10; b <= cfg.bmax; b *= 10) grid.push_back(b);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    Table table(cfg, {"B", "tuple_count", "tuple_quarter", "brute_count", "match"});
    bool all_ok = true;
    for (i64 b : grid) {
        i64 tuples = count_tuples(b, cfg.shards);
        i64 brute = count_brute(b, VarietyParams{}, cfg.shards).count;
        bool ok = tuples % 4 == 0 && tuples / 4 == brute;
        all_ok = all_ok && ok;
        table.add_row(json{{"B", b},
                           {"tuple_count", tuples},
                           {"tuple_quarter", tuples / 4},
                           {"brute_count", brute},
                           {"match", ok ? 1 : 0}});
    }
    table.add_note("all_match", all_ok ? 1 : 0);
    int rc = table.write(cfg);
    if (rc != kOk) return rc;
    return all_ok ? kOk : kAssertionFailed;
}

std::array<i64, 3> sample_primitive(SplitMix64& rng, i64 magnitude, bool allow_zero) {
    while (true) {
        std::array<i64, 3> w;
        for (auto& x : w) {
            x = rng.range(-magnitude, magnitude);
            if (!allow_zero) {
                while (x == 0) x = rng.range(-magnitude, magnitude);
            }
        }
        i64 g = std::gcd(std::gcd(std::abs(w[0]), std::abs(w[1])), std::abs(w[2]));
        if (g == 1) return w;
    }
}

std::array<i64, 3> sample_pairwise_coprime(SplitMix64& rng, i64 magnitude) {
    while (true) {
        std::array<i64, 3> u;
        for (auto& x : u) {
            x = rng.range(-magnitude, magnitude);
            while (x == 0) x = rng.range(-magnitude, magnitude);
        }
        if (std::gcd(std::abs(u[0]), std::abs(u[1])) == 1 &&
            std::gcd(std::abs(u[0]), std::abs(u[2])) == 1 &&
            std::gcd(std::abs(u[1]), std::abs(u[2])) == 1) {
            return u;
        }
    }
}

Box3 sample_box(SplitMix64& rng, double cap) {
    Box3 box;
    for (auto& b : box.bounds) b = 1.0 + rng.unit() * (cap - 1.0);
    return box;
}

int cmd_bounds(const RunConfig& cfg) {
    FactorSieve sieve(default_sieve_limit(cfg));
    SplitMix64 rng(cfg.seed);
    std::string inputs;

    auto report = [&](Table& table, const std::string& tag, i64 observed, double envelope) {
        double ratio = envelope > 0 ? static_cast<double>(observed) / envelope : 0.0;
        table.add_row(json{{"inputs", tag}, {"observed", observed}, {"envelope", envelope}, {"ratio", ratio}});
        return ratio;
    };
    auto tag3 = [](const char* name, const std::array<i64, 3>& v, const Box3& b) {
        std::ostringstream os;
        os << name << "=(" << v[0] << " " << v[1] << " " << v[2] << ") box=(" << fmt_double(b.bounds[0])
           << " " << fmt_double(b.bounds[1]) << " " << fmt_double(b.bounds[2]) << ")";
        return os.str();
    };

    Table table(cfg, {"inputs", "observed", "envelope", "ratio"});
    double max_ratio = 0.0;
    i64 violations = 0;

    switch (cfg.lemma) {
        case 1: {
            auto grid = dyadic_grid(std::min(cfg.maxpow, 8));
            for (int i = 0; i < 20; ++i) {
                auto w = sample_primitive(rng, 1000, true);
                for (const auto& box : grid) {
                    i64 n = count_linear_box(w, box);
                    double env = linear_box_bound(w, box);
                    if (static_cast<double>(n) > env) ++violations;
                    max_ratio = std::max(max_ratio, report(table, tag3("w", w, box), n, env));
                }
            }
            for (int i = 0; i < cfg.samples; ++i) {
                auto w = sample_primitive(rng, 1000, true);
                Box3 box = sample_box(rng, 1000.0);
                i64 n = count_linear_box(w, box);
                double env = linear_box_bound(w, box);
                if (static_cast<double>(n) > env) ++violations;
                max_ratio = std::max(max_ratio, report(table, tag3("w", w, box), n, env));
            }
            table.add_note("violations", violations);
            break;
        }
        case 2: {
            const std::vector<std::array<i64, 3>> canon{{1, 1, -2}, {1, -1, 1}, {2, 3, -5}};
            auto grid = dyadic_grid(cfg.maxpow);
            for (const auto& u : canon) {
                for (const auto& box : grid) {
                    i64 prod = std::abs(u[0] * u[1] * u[2]);
                    i64 n = count_quadratic_box(u, box);
                    double env = quadratic_box_envelope(u, box, divisor_stats(prod, sieve).second);
                    max_ratio = std::max(max_ratio, report(table, tag3("u", u, box), n, env));
                }
            }
            for (int i = 0; i < cfg.samples; ++i) {
                auto u = sample_pairwise_coprime(rng, 30);
                Box3 box = sample_box(rng, std::ldexp(1.0, cfg.maxpow));
                i64 prod = std::abs(u[0] * u[1] * u[2]);
                i64 n = count_quadratic_box(u, box);
                double env = quadratic_box_envelope(u, box, divisor_stats(prod, sieve).second);
                max_ratio = std::max(max_ratio, report(table, tag3("u", u, box), n, env));
            }
            break;
        }
        case 3: {
            auto oracle = [&](const std::array<i64, 3>& c) { return is_soluble(c, sieve); };
            auto grid = dyadic_grid(std::min(cfg.maxpow, 4));
            for (int i = 0; i < std::max(1, cfg.samples / 100); ++i) {
                auto f = sample_pairwise_coprime(rng, 10);
                for (const auto& box : grid) {
                    i64 n = solvable_weight_sum(f, box, sieve, oracle);
                    double prod = box.bounds[0] * box.bounds[1] * box.bounds[2];
                    double fprod = std::abs(static_cast<double>(f[0]) * f[1] * f[2]);
                    double env = std::pow(fprod, cfg.eps) * prod * m_eps(box, cfg.eps);
                    max_ratio = std::max(max_ratio, report(table, tag3("f", f, box), n, env));
                }
            }
            break;
        }
        case 4: {
            const std::vector<std::array<i64, 3>> canon{{1, 1, -2}, {1, 1, 1}, {1, 2, -3}};
            auto grid = dyadic_grid(std::min(cfg.maxpow, 6));
            for (const auto& f : canon) {
                for (const auto& box : grid) {
                    i64 n = count_mixed_box(f, box, box);
                    double env = mixed_box_envelope(f, box, box, cfg.eps);
                    max_ratio = std::max(max_ratio, report(table, tag3("f", f, box), n, env));
                }
            }
            for (int i = 0; i < cfg.samples; ++i) {
                auto f = sample_pairwise_coprime(rng, 10);
                Box3 ubox = sample_box(rng, 16.0);
                Box3 vbox = sample_box(rng, 16.0);
                i64 n = count_mixed_box(f, ubox, vbox);
                double env = mixed_box_envelope(f, ubox, vbox, cfg.eps);
                max_ratio = std::max(max_ratio, report(table, tag3("f", f, ubox) + tag3(" v", f, vbox), n, env));
            }
            break;
        }
        default:
            std::cerr << "biform-counter: --lemma must be 1, 2, 3 or 4\n";
            return kUsage;
    }
    table.add_note("max_ratio", max_ratio);
    int rc = table.write(cfg);
    if (rc != kOk) return rc;
    return violations == 0 ? kOk : kAssertionFailed;
}

int cmd_solvable(const RunConfig& cfg) {
    for (i64 c : cfg.conic) {
        if (c == 0) {
            std::cerr << "biform-counter: solvable needs three nonzero coefficients\n";
            return kUsage;
        }
    }
    i64 need = std::max({std::abs(cfg.conic[0]), std::abs(cfg.conic[1]), std::abs(cfg.conic[2]), i64{100}});
    FactorSieve sieve(need);
    auto witness = find_solution(cfg.conic, sieve);
    if (witness) {
        std::cout << "soluble " << (*witness)[0] << " " << (*witness)[1] << " " << (*witness)[2] << "\n";
    } else {
        std::cout << "insoluble\n";
    }
    return kOk;
}

int cmd_sk(const RunConfig& cfg) {
    SplitMix64 rng(cfg.seed);
    Table table(cfg, {"y0", "y1", "y2", "k", "B", "exact", "mainterm", "deviation", "envelope", "ratio"});
    double max_ratio = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
        i64 y0 = rng.range(1, 30), y1 = rng.range(1, 30), y2 = rng.range(1, 30);
        while (std::gcd(y0, y2) != 1) {
            y0 = rng.range(1, 30);
            y2 = rng.range(1, 30);
        }
        i64 k = rng.range(1, 8);
        double lo = std::log(1000.0), hi = std::log(static_cast<double>(std::max<i64>(cfg.sk_bmax, 1001)));
        i64 B = static_cast<i64>(std::exp(lo + rng.unit() * (hi - lo)));
        std::array<i64, 3> y{y0, y1, y2};
        i64 exact = sk_exact(y, B, k);
        double main = sk_mainterm(y, B, k);
        double dev = std::abs(static_cast<double>(exact) - main);
        double env = 8.0 * (std::sqrt(static_cast<double>(B)) / (static_cast<double>(k) * std::sqrt(static_cast<double>(y2))) + 1.0);
        double ratio = dev / env;
        max_ratio = std::max(max_ratio, ratio);
        table.add_row(json{{"y0", y0}, {"y1", y1}, {"y2", y2}, {"k", k}, {"B", B},
                           {"exact", exact}, {"mainterm", main}, {"deviation", dev},
                           {"envelope", env}, {"ratio", ratio}});
    }
    table.add_note("max_ratio", max_ratio);
    return table.write(cfg);
}

int cmd_fit(const RunConfig& cfg) {
    std::vector<i64> bounds = cfg.fit_bounds;
    if (bounds.empty()) bounds = {1000, 10000, 100000};
    FactorSieve sieve(default_sieve_limit(cfg));
    CountMethod method = method_from_name(cfg.method);
    std::vector<CountRecord> records;
    for (i64 b : bounds) {
        if (method == CountMethod::fiber && b > sieve.limit() && b <= kFiberBoundGuard) sieve.grow(b);
        records.push_back(count_total(b, method, cfg.shards, sieve));
    }
    GrowthReport report = fit_constant(records);
    Table table(cfg, {"B", "N", "ratio"});
    for (const auto& row : report.rows) {
        table.add_row(json{{"B", row.B}, {"N", row.N}, {"ratio", row.ratio}});
    }
    table.add_note("fitted_c", report.fitted_c);
    table.add_note("lower_const", report.lower_const);
    table.add_note("stability", report.stability);
    return table.write(cfg);
}

int cmd_parametrize(const RunConfig& cfg) {
    std::array<i64, 3> x{cfg.point[0], cfg.point[1], cfg.point[2]};
    std::array<i64, 3> y{cfg.point[3], cfg.point[4], cfg.point[5]};
    ParamTuple t;
    try {
        t = decompose(x, y);
    } catch (const contract_violation& e) {
        std::cerr << "biform-counter: " << e.what() << "\n";
        return kUsage;
    }
    auto [rx, ry] = recompose(t);
    bool ok = rx == x && ry == y && validate(t);
    std::cout << "f = (" << t.f[0] << ", " << t.f[1] << ", " << t.f[2] << ")\n"
              << "g = (" << t.g[0] << ", " << t.g[1] << ", " << t.g[2] << ")\n"
              << "h = (" << t.h[0] << ", " << t.h[1] << ", " << t.h[2] << ")\n"
              << "u = (" << t.u[0] << ", " << t.u[1] << ", " << t.u[2] << ")\n"
              << "v = (" << t.v[0] << ", " << t.v[1] << ", " << t.v[2] << ")\n";
    return ok ? kOk : kAssertionFailed;
}

} // namespace

int run(const RunConfig& cfg) {
    try {
        if (cfg.command == "count") return cmd_count(cfg);
        if (cfg.command == "verify-bijection") return cmd_verify_bijection(cfg);
        if (cfg.command == "bounds") return cmd_bounds(cfg);
        if (cfg.command == "solvable") return cmd_solvable(cfg);
        if (cfg.command == "sk") return cmd_sk(cfg);
        if (cfg.command == "fit") return cmd_fit(cfg);
        if (cfg.command == "parametrize") return cmd_parametrize(cfg);
        std::cerr << "biform-counter: unknown command " << cfg.command << "\n";
        return kUsage;
    } catch (const bound_too_large& e) {
        std::cerr << "biform-counter: " << e.what() << "\n";
        return kResourceGuard;
    } catch (const sieve_too_small& e) {
        std::cerr << "biform-counter: " << e.what() << "\n";
        return kResourceGuard;
    } catch (const contract_violation& e) {
        std::cerr << "biform-counter: " << e.what() << "\n";
        return kUsage;
    } catch (const insufficient_data& e) {
        std::cerr << "biform-counter: " << e.what() << "\n";
        return kUsage;
    } catch (const oracle_bug& e) {
        std::cerr << "biform-counter: internal consistency failure: " << e.what() << "\n";
        return kAssertionFailed;
    }
}

int main_entry(int argc, char** argv) {
    CLI::App app{"biform-counter: exact point counts and bound checks for a bidegree-(1,2) threefold"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--shards", cfg.shards, "logical work partitions")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "PRNG seed (splitmix64)");
        sub->add_option("--sieve-limit", cfg.sieve_limit, "smallest-prime-factor sieve limit");
        sub->add_option("--output", cfg.output_path, "output file, - for stdout");
        sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--zero-elapsed", cfg.zero_elapsed, "write elapsed_s as 0 for reproducible files");
    };

    auto* count = app.add_subcommand("count", "exact N(B) for one method");
    count->add_option("--bound", cfg.bound, "height bound B")->required();
    count->add_option("--method", cfg.method, "brute, fiber or param");
    add_common(count);

    auto* verify = app.add_subcommand("verify-bijection", "check N(B) = T(B)/4 over a grid of B");
    verify->add_option("--bmax", cfg.bmax, "largest grid value");
    add_common(verify);

    auto* bounds = app.add_subcommand("bounds", "envelope sweeps over dyadic grids and seeded samples");
    bounds->add_option("--lemma", cfg.lemma, "which bound family: 1, 2, 3 or 4")->required();
    bounds->add_option("--maxpow", cfg.maxpow, "dyadic grid exponent cap");
    bounds->add_option("--samples", cfg.samples, "number of seeded samples");
    bounds->add_option("--eps", cfg.eps, "epsilon for the envelope formulas");
    add_common(bounds);

    auto* solvable = app.add_subcommand("solvable", "decide a v0^2 + b v1^2 + c v2^2 = 0");
    solvable->add_option("coefficients", cfg.conic, "a b c")->required();
    add_common(solvable);

    auto* sk = app.add_subcommand("sk", "slice counts against their main term");
    sk->add_option("--samples", cfg.samples, "number of seeded samples");
    sk->add_option("--bmax", cfg.sk_bmax, "largest sampled B");
    add_common(sk);

    auto* fit = app.add_subcommand("fit", "growth constant report");
    fit->add_option("--bounds", cfg.fit_bounds, "B grid for the fit");
    fit->add_option("--method", cfg.method, "counting method");
    add_common(fit);

    auto* par = app.add_subcommand("parametrize", "tuple decomposition of a point pair");
    par->add_option("coordinates", cfg.point, "x0 x1 x2 y0 y1 y2")->required();
    add_common(par);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    for (auto* sub : {count, verify, bounds, solvable, sk, fit, par}) {
        if (app.got_subcommand(sub)) {
            cfg.command = sub->get_name();
            break;
        }
    }
    return run(cfg);
}

} // namespace biform::cli
