#include <atomic>
#include <charconv>
#include <chrono>
#include <condition_variable>
#include <functional>
#include <iostream>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cache.hpp"
#include "chartab/bijections.hpp"
#include "chartab/char_table.hpp"
#include "chartab/cyclotomic.hpp"
#include "chartab/hall_littlewood.hpp"
#include "chartab/numeric.hpp"
#include "chartab/partition.hpp"
#include "chartab/spin.hpp"

using Json = nlohmann::ordered_json;
using namespace chartab;

namespace {

int strict_int(const std::string& text) {
    int value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw std::invalid_argument("not an integer: '" + text + "'");
    return value;
}

// "a..b" inclusive range, "x,y,z" list, single value, or empty
std::vector<int> parse_values(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const int lo = strict_int(text.substr(0, dots));
        const int hi = strict_int(text.substr(dots + 2));
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    size_t start = 0;
    while (start <= text.size()) {
        const size_t comma = text.find(',', start);
        const size_t stop = comma == std::string::npos ? text.size() : comma;
        out.push_back(strict_int(text.substr(start, stop - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

bool small_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Json int_list(const std::vector<Int>& values) {
    Json out = Json::array();
    for (const Int& v : values) out.push_back(v.get_str());
    return out;
}

// ---------------------------------------------------------------- tables

tool::CachedTable from_char_table(const CharTable& t) {
    tool::CachedTable out;
    for (const auto& label : t.row_labels) out.row_labels.push_back(label.to_string());
    for (const auto& label : t.col_labels) out.col_labels.push_back(label.to_string());
    out.values.resize(t.values.rows());
    for (size_t i = 0; i < t.values.rows(); ++i)
        for (size_t j = 0; j < t.values.cols(); ++j)
            out.values[i].push_back(t.values(i, j).get_str());
    return out;
}

tool::CachedTable compute_table(const std::string& kind, int n, int r) {
    if (kind == "char") return from_char_table(build_tables(n, 2).X);
    if (kind == "regular") return from_char_table(build_tables(n, r).X_RC);
    if (kind == "singular") return from_char_table(build_tables(n, r).X_SS);
    if (kind == "perm") {
        const auto labels = generate_partitions(n);
        tool::CachedTable out;
        for (const auto& label : labels) {
            out.row_labels.push_back(label.to_string());
            out.col_labels.push_back(label.to_string());
        }
        out.values.resize(labels.size());
        for (size_t i = 0; i < labels.size(); ++i)
            for (size_t j = 0; j < labels.size(); ++j)
                out.values[i].push_back(xi(labels[i], labels[j]).get_str());
        return out;
    }
    const SpinTable& table = reduced_table(n);
    tool::CachedTable out;
    for (const auto& label : table.rows) out.row_labels.push_back(label.to_string());
    for (const auto& label : table.cols) out.col_labels.push_back(label.to_string());
    out.values.resize(table.values.rows());
    for (size_t i = 0; i < table.values.rows(); ++i)
        for (size_t j = 0; j < table.values.cols(); ++j)
            out.values[i].push_back(table.values(i, j).get_str());
    return out;
}

int run_table(const std::string& kind, int n, int r, const std::string& format) {
    static const std::set<std::string> kinds = {"char", "perm", "regular",
                                                "singular", "spin"};
    if (!kinds.count(kind)) {
        std::cerr << "unknown table kind: " << kind << '\n';
        return 2;
    }
    if (n < 1) {
        std::cerr << "--n must be at least 1\n";
        return 2;
    }
    const bool needs_r = kind == "regular" || kind == "singular";
    if (needs_r && r < 2) {
        std::cerr << "table " << kind << " needs --r at least 2\n";
        return 2;
    }

    const std::string key = tool::cache_key(kind, n, needs_r ? r : 0);
    tool::CachedTable table;
    if (auto hit = tool::cache_load(key)) {
        table = std::move(*hit);
    } else {
        table = compute_table(kind, n, r);
        tool::cache_store(key, table);
    }

    if (format == "json") {
        Json j;
        j["kind"] = kind;
        j["n"] = n;
        if (needs_r) j["r"] = r;
        j["rows"] = table.row_labels;
        j["cols"] = table.col_labels;
        j["values"] = table.values;
        std::cout << j.dump() << '\n';
        return 0;
    }
    std::string line;
    for (const auto& label : table.col_labels) {
        line += ",\"";
        line += label;
        line += '"';
    }
    std::cout << line << '\n';
    for (size_t i = 0; i < table.values.size(); ++i) {
        line = "\"" + table.row_labels[i] + "\"";
        for (const auto& cell : table.values[i]) {
            line += ',';
            line += cell;
        }
        std::cout << line << '\n';
    }
    return 0;
}

// ------------------------------------------------------- report running

// prints finished reports in cell order regardless of completion order
class OrderedWriter {
public:
    void emit(size_t index, const std::string& line) {
        std::unique_lock<std::mutex> lock(mutex_);
        ready_.wait(lock, [&] { return index == next_; });
        std::cout << line << '\n';
        ++next_;
        ready_.notify_all();
    }

private:
    std::mutex mutex_;
    std::condition_variable ready_;
    size_t next_ = 0;
};

using CellFn = std::function<std::pair<Json, bool>(size_t)>;

bool run_pool(size_t count, int jobs, bool timings, const CellFn& cell) {
    if (count == 0) return true;
    size_t workers = jobs > 0 ? static_cast<size_t>(jobs)
                              : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, count);

    OrderedWriter writer;
    std::atomic<size_t> cursor{0};
    std::atomic<bool> all_ok{true};
    auto body = [&] {
        for (;;) {
            const size_t index = cursor.fetch_add(1);
            if (index >= count) return;
            const auto started = std::chrono::steady_clock::now();
            Json report;
            bool ok = false;
            try {
                std::tie(report, ok) = cell(index);
            } catch (const std::exception& e) {
                report["status"] = "error";
                report["message"] = e.what();
            }
            if (timings) {
                const auto elapsed = std::chrono::steady_clock::now() - started;
                report["elapsed_ms"] = static_cast<long>(
                    std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
                        .count());
            }
            if (!ok) all_ok = false;
            writer.emit(index, report.dump());
        }
    };
    std::vector<std::thread> pool;
    for (size_t w = 0; w + 1 < workers; ++w) pool.emplace_back(body);
    body();
    for (auto& t : pool) t.join();
    return all_ok;
}

Json report_base(const std::string& id, Json parameters, bool pass) {
    Json j;
    j["theorem_id"] = id;
    j["parameters"] = std::move(parameters);
    j["status"] = pass ? "pass" : "fail";
    return j;
}

// ------------------------------------------------------------- verify

bool delta_bijective(const DeltaMap& dm) {
    std::set<DefectTriple> hit_defect;
    std::set<TstEntry> hit_target;
    for (const auto& [src, img] : dm.entries) {
        if (img.to_defect) {
            if (!hit_defect.insert(img.triple).second) return false;
        } else {
            if (!hit_target.insert(img.target).second) return false;
        }
    }
    return hit_defect == std::set<DefectTriple>(dm.defect_side.begin(),
                                                dm.defect_side.end()) &&
           hit_target ==
               std::set<TstEntry>(dm.target_side.begin(), dm.target_side.end());
}

std::pair<Json, bool> verify_cell(const std::string& id, int n, int r, int p,
                                  int n_max) {
    if (id == "det-regular" || id == "det-singular") {
        const DetReport rep = verify_det_theorems(n, r);
        Json params{{"n", n}, {"r", r}};
        if (id == "det-regular") {
            Json j = report_base(id, params, rep.rc_matches);
            j["lhs"] = Int(abs(rep.det_RC)).get_str();
            j["rhs"] = rep.a_C.get_str();
            return {j, rep.rc_matches};
        }
        const bool pass = rep.ss_matches && rep.jacobi_matches;
        Json j = report_base(id, params, pass);
        j["lhs"] = Json{{"det", Int(abs(rep.det_SS)).get_str()},
                        {"jacobi_minor", rep.jacobi_minor.get_str()}};
        j["rhs"] = Json{{"det", rep.b_Csing.get_str()},
                        {"jacobi_expected", rep.jacobi_expected.get_str()}};
        return {j, pass};
    }
    if (id == "det-squared-cyclotomic") {
        const Tables tables = build_tables(n, r);
        const Int d = det(tables.X_RC.values);
        const ProductSide side = product_side(n, r);
        const bool pass = side.product.is_rational() &&
                          side.product.to_rational() == Rat(d * d);
        Json j = report_base(id, Json{{"n", n}, {"r", r}}, pass);
        j["lhs"] = Int(d * d).get_str();
        j["rhs"] = side.product.to_string();
        return {j, pass};
    }
    if (id == "ba-ratio") {
        const ProductSide side = product_side(n, r);
        const long d_c =
            aggregate(generate_partitions(n, Filter::class_regular(r)), r)
                .defect;
        const Int want = int_pow(Int(r), static_cast<unsigned long>(d_c));
        const bool pass =
            side.ratio.is_rational() && side.ratio.to_rational() == Rat(want);
        Json j = report_base(id, Json{{"n", n}, {"r", r}}, pass);
        j["lhs"] = side.ratio.to_string();
        j["rhs"] = want.get_str();
        return {j, pass};
    }
    if (id == "alpha-beta") {
        bool pass = true;
        Json lhs = Json::array(), rhs = Json::array(), counter;
        for (int s = 1; s < r; ++s) {
            const AlphaBeta ab = alpha_beta(n, r, s);
            lhs.push_back(ab.alpha);
            rhs.push_back(ab.beta + ab.d_C);
            if (ab.alpha != ab.beta + ab.d_C) pass = false;
        }
        if (n <= 18) {
            for (const auto& mu :
                 generate_partitions(n, Filter::class_regular(r))) {
                for (int s = 1; s < r && counter.is_null(); ++s)
                    for (int t = 1; t < r; ++t)
                        if (!delta_bijective(delta_st(mu, r, s, t))) {
                            pass = false;
                            counter = Json{{"mu", mu.to_string()},
                                           {"s", s},
                                           {"t", t}};
                            break;
                        }
                if (!counter.is_null()) break;
            }
        }
        Json j = report_base(id, Json{{"n", n}, {"r", r}}, pass);
        j["lhs"] = lhs;
        j["rhs"] = rhs;
        if (!counter.is_null()) j["counterexample"] = counter;
        return {j, pass};
    }
    if (id == "cartan-det") {
        const CartanReport rep = decomposition_and_cartan(n, r);
        Json j = report_base(id, Json{{"n", n}, {"r", r}}, rep.ok());
        j["lhs"] = Json{{"det_D", rep.det_D_abs.get_str()},
                        {"cartan_det", rep.cartan_det.get_str()},
                        {"integral", rep.integral}};
        j["rhs"] = rep.r_power.get_str();
        return {j, rep.ok()};
    }
    if (id == "snf-regular" || id == "snf-full") {
        const SnfTheoremReport rep =
            id == "snf-regular" ? verify_snf_theorem(n, p) : verify_snf_full(n);
        Json params = id == "snf-regular" ? Json{{"n", n}, {"p", p}}
                                          : Json{{"n", n}};
        Json j = report_base(id, params, rep.matches);
        j["lhs"] = int_list(rep.lhs);
        j["rhs"] = int_list(rep.rhs);
        return {j, rep.matches};
    }
    if (id == "spin-snf") {
        const SpinSnfReport rep = verify_spin_snf(n);
        Json j = report_base(id, Json{{"n", n}}, rep.matches);
        j["lhs"] = int_list(rep.lhs);
        j["rhs"] = int_list(rep.rhs);
        return {j, rep.matches};
    }
    if (id == "orthogonality") {
        const bool pass = verify_orthogonality(n);
        Json j = report_base(id, Json{{"n", n}}, pass);
        j["lhs"] = pass ? "identity" : "mismatch";
        j["rhs"] = "identity";
        return {j, pass};
    }
    if (id == "factorization") {
        const FactorizationReport rep = verify_factorization(n, r);
        Json j = report_base(id, Json{{"n", n}, {"r", r}}, rep.ok());
        j["lhs"] = Json{{"q_vanishing", rep.q_vanishing},
                        {"class_regular_support", rep.class_regular_support},
                        {"det_squared_matches", rep.det_squared_matches},
                        {"det_squared_rational", rep.det_squared_rational},
                        {"transition_unitriangular",
                         rep.transition_unitriangular}};
        j["rhs"] = "all true";
        return {j, rep.ok()};
    }
    // series: coefficient-by-coefficient against direct counts up to n_max
    const int s = p;
    const SeriesCoefficients sc =
        series_coefficients(r, s, n_max);
    bool pass = sc.A[0] == 0 && sc.B[0] == 0 && sc.D[0] == 0 && sc.P_r[0] == 1;
    Json counter;
    for (int m = 1; m <= n_max && counter.is_null(); ++m) {
        const AlphaBeta ab = alpha_beta(m, r, s);
        const auto idx = static_cast<size_t>(m);
        const long regular_count = static_cast<long>(
            generate_partitions(m, Filter::regular(r)).size());
        const char* bad = nullptr;
        if (sc.A[idx] != Rat(ab.alpha)) bad = "A";
        else if (sc.B[idx] != Rat(ab.beta)) bad = "B";
        else if (sc.D[idx] != Rat(ab.d_C)) bad = "D";
        else if (sc.P_r[idx] != Rat(regular_count)) bad = "P_r";
        if (bad != nullptr) {
            pass = false;
            counter = Json{{"n", m}, {"series", bad}};
        }
    }
    Json j = report_base(id, Json{{"r", r}, {"s", s}, {"n_max", n_max}}, pass);
    j["lhs"] = Json{{"checked", n_max}};
    j["rhs"] = Json{{"checked", n_max}};
    if (!counter.is_null()) j["counterexample"] = counter;
    return {j, pass};
}

int run_verify(const std::string& id, const std::string& n_text,
               const std::string& r_text, const std::string& p_text,
               bool timings, int jobs) {
    static const std::set<std::string> uses_r = {
        "det-regular",  "det-singular", "det-squared-cyclotomic",
        "ba-ratio",     "alpha-beta",   "cartan-det",
        "factorization"};
    static const std::set<std::string> n_only = {"snf-full", "spin-snf",
                                                 "orthogonality"};
    static const std::set<std::string> known = [] {
        std::set<std::string> all = uses_r;
        all.insert(n_only.begin(), n_only.end());
        all.insert({"snf-regular", "series"});
        return all;
    }();
    if (!known.count(id)) {
        std::cerr << "unknown theorem id: " << id << '\n';
        return 2;
    }

    const std::vector<int> ns = parse_values(n_text);
    const std::vector<int> rs = parse_values(r_text);
    const std::vector<int> ps = parse_values(p_text);
    for (int n : ns)
        if (n < 1) {
            std::cerr << "--n values must be at least 1\n";
            return 2;
        }

    struct Cell {
        int n = 0, r = 0, p = 0, n_max = 0;
    };
    std::vector<Cell> cells;
    if (uses_r.count(id)) {
        for (int r : rs)
            if (r < 2) {
                std::cerr << "--r values must be at least 2\n";
                return 2;
            }
        for (int n : ns)
            for (int r : rs) cells.push_back({n, r, 0, 0});
    } else if (id == "snf-regular") {
        for (int p : ps)
            if (!small_prime(p)) {
                std::cerr << "--p values must be prime\n";
                return 2;
            }
        for (int n : ns)
            for (int p : ps) cells.push_back({n, 0, p, 0});
    } else if (id == "series") {
        for (int r : rs)
            if (r < 2) {
                std::cerr << "--r values must be at least 2\n";
                return 2;
            }
        if (!ns.empty()) {
            const int n_max = *std::max_element(ns.begin(), ns.end());
            for (int r : rs)
                for (int s = 1; s < r; ++s) cells.push_back({0, r, s, n_max});
        }
    } else {
        for (int n : ns) cells.push_back({n, 0, 0, 0});
    }

    const bool all_ok =
        run_pool(cells.size(), jobs, timings, [&](size_t index) {
            const Cell& c = cells[index];
            return verify_cell(id, c.n, c.r, c.p, c.n_max);
        });
    return all_ok ? 0 : 1;
}

// --------------------------------------------------------------- scan

int run_scan(const std::string& id, const std::string& n_text,
             const std::string& r_text, const std::string& p_text,
             bool timings, int jobs) {
    if (id != "pi-prime-snf" && id != "spin-p-snf") {
        std::cerr << "unknown conjecture id: " << id << '\n';
        return 2;
    }
    const std::vector<int> ns = parse_values(n_text);
    const std::vector<int> rs = parse_values(r_text);
    const std::vector<int> ps = parse_values(p_text);
    for (int n : ns)
        if (n < 1) {
            std::cerr << "--n values must be at least 1\n";
            return 2;
        }

    struct Cell {
        int n = 0, rp = 0;
    };
    std::vector<Cell> cells;
    if (id == "pi-prime-snf") {
        for (int r : rs)
            if (r < 4 || small_prime(r)) {
                std::cerr << "pi-prime-snf wants composite r >= 4\n";
                return 2;
            }
        for (int n : ns)
            for (int r : rs) cells.push_back({n, r});
    } else {
        for (int p : ps)
            if (p == 2 || !small_prime(p)) {
                std::cerr << "spin-p-snf wants odd prime p\n";
                return 2;
            }
        for (int n : ns)
            for (int p : ps) cells.push_back({n, p});
    }

    run_pool(cells.size(), jobs, timings, [&](size_t index) {
        const Cell& c = cells[index];
        Json j;
        j["conjecture_id"] = id;
        if (id == "pi-prime-snf") {
            const PiPrimeScan scan = scan_pi_prime_conjecture(c.n, c.rp);
            j["parameters"] = Json{{"n", c.n}, {"r", c.rp}};
            j["status"] = "scan";
            j["match"] = scan.match;
            j["pi"] = int_list(scan.pi);
            j["lhs"] = int_list(scan.lhs);
            j["rhs"] = int_list(scan.rhs);
        } else {
            const SpinScan scan = scan_spin_p_conjecture(c.n, c.rp);
            j["parameters"] = Json{{"n", c.n}, {"p", c.rp}};
            j["status"] = "scan";
            j["sizes_match"] = scan.sizes_match;
            j["match"] = scan.match;
            j["lhs"] = int_list(scan.lhs);
            j["rhs"] = int_list(scan.rhs);
        }
        return std::make_pair(j, true);
    });
    return 0;
}

}  // namespace

int main(int argc, char** argv) try {
    CLI::App app{"exact character tables of symmetric groups, their deformations, and their double covers"};
    app.require_subcommand(1);

    std::string kind, format = "csv";
    int table_n = 0, table_r = 0;
    auto* table_cmd =
        app.add_subcommand("table", "emit a table as CSV or JSON");
    table_cmd->add_option("kind", kind, "char|perm|regular|singular|spin")
        ->required();
    table_cmd->add_option("--n", table_n, "symmetric group size")->required();
    table_cmd->add_option("--r", table_r, "regularity parameter");
    table_cmd->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    std::string theorem, verify_n, verify_r, verify_p;
    bool verify_timings = false;
    int verify_jobs = 0;
    auto* verify_cmd = app.add_subcommand(
        "verify", "check an exact identity over a parameter grid");
    verify_cmd->add_option("theorem", theorem, "theorem identifier")
        ->required();
    verify_cmd->add_option("--n", verify_n, "n range, e.g. 1..10");
    verify_cmd->add_option("--r", verify_r, "r range or list");
    verify_cmd->add_option("--p", verify_p, "prime list, e.g. 2,3,5");
    verify_cmd->add_flag("--timings", verify_timings,
                         "include elapsed_ms in reports");
    verify_cmd->add_option("--jobs", verify_jobs, "worker threads");

    std::string conjecture, scan_n, scan_r, scan_p;
    bool scan_timings = false;
    int scan_jobs = 0;
    auto* scan_cmd = app.add_subcommand(
        "scan", "tabulate an open question without asserting it");
    scan_cmd->add_option("conjecture", conjecture, "conjecture identifier")
        ->required();
    scan_cmd->add_option("--n", scan_n, "n range");
    scan_cmd->add_option("--r", scan_r, "composite r list");
    scan_cmd->add_option("--p", scan_p, "odd prime list");
    scan_cmd->add_flag("--timings", scan_timings,
                       "include elapsed_ms in reports");
    scan_cmd->add_option("--jobs", scan_jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (table_cmd->parsed()) return run_table(kind, table_n, table_r, format);
    if (verify_cmd->parsed())
        return run_verify(theorem, verify_n, verify_r, verify_p,
                          verify_timings, verify_jobs);
    return run_scan(conjecture, scan_n, scan_r, scan_p, scan_timings,
                    scan_jobs);
} catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
}
