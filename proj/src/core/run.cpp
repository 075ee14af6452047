#include "core/run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "core/asymptotics.hpp"
#include "core/errors.hpp"
#include "core/fn_table.hpp"
#include "core/gcd_sums.hpp"
#include "core/mean_square.hpp"

namespace gcdsum {
namespace {

std::string fmt_real(Real v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17Lg", v);
    return std::string(buf);
}

// Buffers every row and writes once, so partial files never appear and file
// writes stay serialized no matter how the rows were produced.
class csv_writer {
  public:
    explicit csv_writer(std::string path) : path_(std::move(path)) {}

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) buf_ += ',';
            buf_ += cells[i];
        }
        buf_ += '\n';
    }

    void flush() {
        if (path_.empty()) {
            std::fwrite(buf_.data(), 1, buf_.size(), stdout);
            std::fflush(stdout);
            return;
        }
        std::ofstream out(path_, std::ios::binary | std::ios::trunc);
        if (!out) throw config_error("cannot open output file '" + path_ + "'");
        out.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
        if (!out) throw config_error("write failed for output file '" + path_ + "'");
    }

  private:
    std::string path_;
    std::string buf_;
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    // stoull tolerates signs and wraps negatives; demand plain digits
    if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
        throw config_error("key '" + key + "': expected an unsigned integer, got '" + value + "'");
    try {
        return std::stoull(value);
    } catch (const std::exception&) {
        throw config_error("key '" + key + "': expected an unsigned integer, got '" + value + "'");
    }
}

Real parse_real_value(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        Real v = std::stold(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing text");
        if (!std::isfinite(v)) throw std::invalid_argument("not finite");
        return v;
    } catch (const std::exception&) {
        throw config_error("key '" + key + "': expected a real number, got '" + value + "'");
    }
}

std::vector<Real> parse_real_list(const std::string& key, const std::string& value) {
    std::vector<Real> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(parse_real_value(key, item));
    }
    if (out.empty()) throw config_error("key '" + key + "': empty list");
    return out;
}

// ------------------------------------------------------------------ commands

// Exhaustive (or seeded-random) check of the exact closed-form rearrangement
// of the weighted averages: for s = 1 the single-power identity, for s >= 2
// the s-power identity evaluated by its literal triple loop. Exact tables
// demand a zero discrepancy; real-backed tables allow roundoff.
int cmd_verify_identity(const RunConfig& cfg, csv_writer& out) {
    if (cfg.r < 1 || cfg.r > 20)
        throw config_error("verify-identity: r must lie in 1..20");
    if (cfg.s < 1 || cfg.s > 6)
        throw config_error("verify-identity: s must lie in 1..6");
    if (cfg.x_max < 1.0L || cfg.x_max > 1.0e6L)
        throw config_error("verify-identity: x_max must lie in [1, 1e6]");

    const FnSpec fs = FnSpec::parse(cfg.f);
    const std::uint64_t X = floor_u64(cfg.x_max);
    const FnTable f = sieve(fs, X);
    const FnTable f_mu = dirichlet_convolve(f, sieve(FnSpec::parse("mu"), X));

    std::vector<std::uint64_t> xs;
    if (cfg.samples == 0) {
        xs.reserve(X);
        for (std::uint64_t x = 1; x <= X; ++x) xs.push_back(x);
    } else {
        // Plain modulo reduction keeps the draw sequence identical across
        // standard-library versions; sampling bias is irrelevant here.
        std::mt19937_64 gen(cfg.seed);
        xs.reserve(cfg.samples);
        for (std::uint64_t i = 0; i < cfg.samples; ++i) xs.push_back(1 + gen() % X);
        std::sort(xs.begin(), xs.end());
    }

    out.row({"x", "r", "s", "f", "lhs", "rhs", "discrepancy"});
    std::uint64_t bad = 0;
    for (std::uint64_t x : xs) {
        ScalarValue lhs, rhs;
        if (cfg.s == 1) {
            lhs = m_r_exact(f, static_cast<Real>(x), cfg.r);
            rhs = m_r_identity_rhs(f, f_mu, static_cast<Real>(x), cfg.r);
        } else {
            lhs = m_rs_exact(f, f_mu, static_cast<Real>(x), cfg.r, cfg.s, cfg.budget);
            rhs = m_rs_identity_rhs(f, f_mu, static_cast<Real>(x), cfg.r, cfg.s);
        }
        std::string disc;
        bool ok = true;
        if (lhs.backend == Backend::exact && rhs.backend == Backend::exact) {
            Rat d = lhs.exact - rhs.exact;
            ok = (d == 0);
            disc = rat_to_string(d);
        } else {
            Real d = lhs.real() - rhs.real();
            ok = std::fabs(d) <= 1.0e-9L * (1.0L + std::fabs(lhs.real()));
            disc = fmt_real(d);
        }
        if (!ok) ++bad;
        out.row({std::to_string(x), std::to_string(cfg.r), std::to_string(cfg.s),
                 fs.label(), lhs.str(), rhs.str(), disc});
    }
    if (bad) {
        std::fprintf(stderr, "verify-identity: %llu of %zu checks failed\n",
                     static_cast<unsigned long long>(bad), xs.size());
        return 2;
    }
    return 0;
}

SumParams params_from(const RunConfig& cfg) {
    SumParams p;
    p.r = cfg.r;
    p.s = cfg.s;
    p.a = cfg.a;
    p.h = parse_h_kind(cfg.h);
    p.q = cfg.q;
    return p;
}

int cmd_error_term(const RunConfig& cfg, csv_writer& out) {
    if (cfg.theorem.empty())
        throw config_error("error-term: a theorem selector is required");
    if (cfg.x_max < 10.0L || cfg.x_max > 1.0e7L)
        throw config_error("error-term: x_max must lie in [10, 1e7]");
    const TheoremId id = parse_theorem(cfg.theorem);
    const SumParams p = params_from(cfg);
    ErrorTermLab lab(id, p, floor_u64(cfg.x_max));
    const std::vector<Real> xs = sweep_grid(10.0L, cfg.x_max);
    const std::vector<ErrorSample> rows = lab.sweep(xs);
    out.row({"x", "exact", "main", "K", "K_formula", "residual"});
    for (const ErrorSample& e : rows)
        out.row({fmt_real(e.x), fmt_real(e.exact), fmt_real(e.main), fmt_real(e.K),
                 fmt_real(e.K_formula), fmt_real(e.residual)});
    return 0;
}

int cmd_mean_square(const RunConfig& cfg, csv_writer& out) {
    if (cfg.theorem.empty())
        throw config_error("mean-square: a law selector is required");
    if (cfg.t_list.empty())
        throw config_error("mean-square: T_list must not be empty");
    for (Real T : cfg.t_list)
        if (T < 2.0L || T > 1.0e7L)
            throw config_error("mean-square: every T must lie in [2, 1e7]");
    const MeanSquareKind kind = parse_mean_square_kind(cfg.theorem);
    const SumParams p = params_from(cfg);
    MeanSquareReport rep = mean_square_report(kind, p, cfg.t_list, cfg.series_n);
    std::fprintf(stderr, "mean-square %s: constant %s = %s (N=%llu, tail bound %s)\n",
                 mean_square_kind_token(kind).c_str(), series_kind_token(rep.constant.kind).c_str(),
                 fmt_real(rep.constant.value).c_str(),
                 static_cast<unsigned long long>(rep.constant.truncation),
                 fmt_real(rep.constant.tail_bound).c_str());
    out.row({"T", "integral", "prediction", "ratio"});
    for (const MeanSquareRow& r : rep.rows)
        out.row({fmt_real(r.T), fmt_real(r.integral), fmt_real(r.prediction), fmt_real(r.ratio)});
    return 0;
}

int cmd_constants(const RunConfig& cfg, csv_writer& out) {
    if (cfg.kind.empty())
        throw config_error("constants: a series-constant selector is required");
    const SeriesKind kind = parse_series_kind(cfg.kind);
    const SeriesConstant c = series_constant(kind, cfg.a, cfg.series_n);
    out.row({"kind", "a", "N", "value", "tail_bound"});
    out.row({series_kind_token(c.kind), c.a ? fmt_real(*c.a) : std::string(),
             std::to_string(c.truncation), fmt_real(c.value), fmt_real(c.tail_bound)});
    return 0;
}

int cmd_tabulate(const RunConfig& cfg, csv_writer& out) {
    if (cfg.table_limit < 1 || cfg.table_limit > 20000000ULL)
        throw config_error("tabulate: table_limit must lie in [1, 2e7]");
    const FnSpec fs = FnSpec::parse(cfg.f);
    const FnTable t = sieve(fs, cfg.table_limit);
    out.row({"n", "value"});
    for (std::uint64_t n = 1; n <= t.limit(); ++n) {
        std::string cell = t.is_exact() ? rat_to_string(t.rat(n)) : fmt_real(t.real(n));
        out.row({std::to_string(n), cell});
    }
    return 0;
}

}  // namespace

void RunConfig::apply_kv(const std::string& key, const std::string& value) {
    if (key == "command") {
        command = value;
    } else if (key == "r") {
        r = static_cast<unsigned>(parse_u64(key, value));
    } else if (key == "s") {
        s = static_cast<unsigned>(parse_u64(key, value));
    } else if (key == "a") {
        if (value.empty())
            a.reset();
        else
            a = parse_real_value(key, value);
    } else if (key == "f") {
        f = value;
    } else if (key == "theorem") {
        theorem = value;
    } else if (key == "kind") {
        kind = value;
    } else if (key == "h") {
        h = value;
    } else if (key == "q") {
        q = static_cast<unsigned>(parse_u64(key, value));
    } else if (key == "x_max") {
        x_max = parse_real_value(key, value);
    } else if (key == "T_list" || key == "t_list") {
        t_list = parse_real_list(key, value);
    } else if (key == "table_limit") {
        table_limit = parse_u64(key, value);
    } else if (key == "series_N" || key == "series_n") {
        series_n = parse_u64(key, value);
    } else if (key == "output") {
        output = value;
    } else if (key == "seed") {
        seed = parse_u64(key, value);
    } else if (key == "samples") {
        samples = parse_u64(key, value);
    } else if (key == "budget") {
        budget = parse_u64(key, value);
    } else {
        throw config_error("unknown config key '" + key + "'");
    }
}

void RunConfig::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file '" + path + "'");
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config file '" + path + "' line " + std::to_string(lineno) +
                               ": expected key=value");
        apply_kv(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

RunConfig RunConfig::from_file(const std::string& path) {
    RunConfig cfg;
    cfg.load_file(path);
    return cfg;
}

int run(const RunConfig& cfg) {
    try {
        csv_writer out(cfg.output);
        int code = 0;
        if (cfg.command == "verify-identity")
            code = cmd_verify_identity(cfg, out);
        else if (cfg.command == "error-term")
            code = cmd_error_term(cfg, out);
        else if (cfg.command == "mean-square")
            code = cmd_mean_square(cfg, out);
        else if (cfg.command == "constants")
            code = cmd_constants(cfg, out);
        else if (cfg.command == "tabulate")
            code = cmd_tabulate(cfg, out);
        else
            throw config_error("unknown command '" + cfg.command + "'");
        out.flush();
        return code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "gcdsum: %s\n", e.what());
        return 1;
    }
}

}  // namespace gcdsum
