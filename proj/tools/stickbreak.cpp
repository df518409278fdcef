// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or input error.

#include <stickbreak/stickbreak.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace sb = stickbreak;
namespace ex = stickbreak::experiments;

namespace {

constexpr int kUsageError = 2;

struct Common {
    std::string kind = "vdc2";
    std::string n;
    std::string r;
    bool origin = true;
    std::string format = "csv";
    std::string out;
    unsigned jobs = 1;
};

/// Standard output unless a path is given.
class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

ex::OutputFormat parse_format(const std::string& f) {
    if (f == "csv") return ex::OutputFormat::Csv;
    if (f == "json") return ex::OutputFormat::Json;
    throw std::invalid_argument("unknown format '" + f + "' (csv, json)");
}

void add_kind(CLI::App* cmd, Common& c) {
    cmd->add_option("--kind", c.kind, "vdc2 | vdc:<b> | kronecker-phi | debruijn-log")->capture_default_str();
}
void add_origin(CLI::App* cmd, Common& c) {
    cmd->add_flag("--origin,!--no-origin", c.origin, "include x_0 = 0")->capture_default_str();
}
void add_output(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "csv | json")->capture_default_str();
    cmd->add_option("--out", c.out, "output path (default: standard output)");
}

ex::SweepConfig sweep_config(const Common& c) {
    ex::SweepConfig cfg;
    cfg.kind = sb::SequenceKind::parse(c.kind);
    cfg.n_values = ex::parse_int_list(c.n);
    cfg.r_values = ex::parse_int_list(c.r);
    cfg.include_origin = c.origin;
    cfg.format = parse_format(c.format);
    cfg.out_path = c.out;
    cfg.jobs = c.jobs;
    return cfg;
}

template <class Row, class WriteHeader, class WriteRow>
void emit_rows(const std::vector<Row>& rows, ex::OutputFormat format, const std::string& out, WriteHeader header,
               WriteRow row) {
    Output o(out);
    if (format == ex::OutputFormat::Json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) arr.push_back(sb::to_json(r));
        o.stream() << arr.dump(1) << '\n';
        return;
    }
    header(o.stream());
    for (const auto& r : rows) row(o.stream(), r);
}

std::uint64_t single_n(const std::string& text) {
    auto v = ex::parse_int_list(text);
    if (v.size() != 1) throw std::invalid_argument("--n must be a single value here");
    return v.front();
}

int run_generate(const Common& c) {
    const auto kind = sb::SequenceKind::parse(c.kind);
    const auto prefix = sb::build_prefix(kind, single_n(c.n), c.origin);
    Output o(c.out);
    std::visit(
        [&](const auto& p) {
            if (parse_format(c.format) == ex::OutputFormat::Csv) {
                sb::write_prefix_csv(o.stream(), p);
                return;
            }
            nlohmann::json pts = nlohmann::json::array();
            for (std::size_t i = 0; i < p.size(); ++i) {
                auto v = p.model.point_value(p.points[i]);
                pts.push_back({{"sorted_pos", i}, {"seq_index", p.index_map[i]}, {"value_exact", sb::to_string(v)},
                               {"value_float", sb::to_double(v)}});
            }
            o.stream() << nlohmann::json{{"kind", kind.to_string()}, {"n", p.n}, {"include_origin", p.include_origin},
                                         {"precision_warning", p.precision_warning}, {"points", pts}}
                              .dump(1)
                       << '\n';
        },
        prefix);
    return 0;
}

int run_gaps(const Common& c) {
    const auto kind = sb::SequenceKind::parse(c.kind);
    const auto prefix = sb::build_prefix(kind, single_n(c.n), c.origin);
    Output o(c.out);
    std::visit(
        [&](const auto& p) {
            const auto g = sb::gap_vector(p);
            if (parse_format(c.format) == ex::OutputFormat::Csv) {
                o.stream() << "sorted_pos,gap_exact,gap_float\n";
                for (std::size_t i = 0; i < g.size(); ++i) {
                    auto v = g.model.length_value(g.gaps[i]);
                    o.stream() << i << ',' << sb::to_string(v) << ',' << sb::format_double(sb::to_double(v)) << '\n';
                }
                return;
            }
            nlohmann::json gaps = nlohmann::json::array();
            for (const auto& x : g.gaps) gaps.push_back(sb::to_string(g.model.length_value(x)));
            o.stream() << nlohmann::json{{"kind", kind.to_string()}, {"n", g.n}, {"gaps", gaps},
                                         {"total", sb::to_string(g.model.length_value(g.total))}}
                              .dump(1)
                       << '\n';
        },
        prefix);
    return 0;
}

int run_windows(const Common& c) {
    const auto cfg = sweep_config(c);
    emit_rows(ex::run_ratio_sweep(cfg), cfg.format, cfg.out_path, sb::write_windows_csv_header, sb::write_windows_csv_row);
    return 0;
}

int run_discrepancy(const Common& c, bool wrap) {
    const auto cfg = sweep_config(c);
    emit_rows(ex::run_discrepancy_sweep(cfg, wrap), cfg.format, cfg.out_path, sb::write_discrepancy_csv_header,
              sb::write_discrepancy_csv_row);
    return 0;
}

int run_paircorr(const Common& c, const std::string& s_text) {
    std::vector<sb::Value> s_values;
    std::stringstream ss(s_text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.find("..") != std::string::npos)
            for (auto v : ex::parse_int_list(item)) s_values.emplace_back(sb::Rational(static_cast<std::int64_t>(v)));
        else
            s_values.push_back(sb::parse_value(item));
    }
    const auto rows =
        ex::run_paircorr_sweep(sb::SequenceKind::parse(c.kind), ex::parse_int_list(c.n), s_values, c.jobs);
    emit_rows(rows, parse_format(c.format), c.out, sb::write_paircorr_csv_header, sb::write_paircorr_csv_row);
    return 0;
}

int run_verify(unsigned t_max, std::uint64_t n_max, const std::string& out) {
    const auto result = ex::verify_all(t_max, n_max);
    Output o(out);
    o.stream() << result.to_json().dump(1) << '\n';
    for (const auto& r : result.reports)
        std::cerr << (r.all_passed ? "PASS " : "FAIL ") << r.lemma << " (" << r.parameter_range << ", " << r.checked
                  << " checks)\n";
    return result.exit_status();
}

int run_fit(const std::string& in_path, const std::string& quantity, std::size_t min_r, const std::string& out) {
    std::ifstream in(in_path);
    if (!in) throw std::runtime_error("cannot open '" + in_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto q = ex::parse_fit_quantity(quantity);
    const bool json = text.find_first_not_of(" \t\r\n") != std::string::npos &&
                      text[text.find_first_not_of(" \t\r\n")] == '[';
    std::istringstream is(text);
    ex::FitResult fit;
    auto rows_from_json = [&](auto from_json) {
        using Row = decltype(from_json(nlohmann::json{}));
        std::vector<Row> rows;
        for (const auto& j : nlohmann::json::parse(text)) rows.push_back(from_json(j));
        return rows;
    };
    switch (q) {
    case ex::FitQuantity::RatioBound:
        fit = ex::fit_constant(json ? rows_from_json(sb::window_report_from_json) : sb::read_windows_csv(is), min_r);
        break;
    case ex::FitQuantity::DiscrepancyBound:
        fit = ex::fit_constant(json ? rows_from_json(sb::discrepancy_report_from_json) : sb::read_discrepancy_csv(is),
                               min_r);
        break;
    case ex::FitQuantity::PaircorrBound:
        fit = ex::fit_constant(json ? rows_from_json(sb::paircorr_report_from_json) : sb::read_paircorr_csv(is), min_r);
        break;
    }
    Output o(out);
    o.stream() << ex::to_json(fit).dump(1) << '\n';
    return 0;
}

int run_theorem1(std::uint64_t n_max, std::uint64_t n_start, const std::string& out) {
    const auto t = ex::theorem1_constants(n_max, n_start);
    Output o(out);
    o.stream() << ex::to_json(t).dump(1) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stick-breaking sequences: gap statistics and lemma verifiers"};
    app.set_config("--config", "", "TOML/INI file with option values; command-line flags override it");
    app.require_subcommand(1);

    Common c;
    bool wrap = true;
    std::string s_text = "2..64";
    unsigned t_max = 8;
    std::uint64_t n_max = 1024, n_start = 1000;
    std::string in_path, quantity;
    std::size_t min_r = 3;

    auto* generate = app.add_subcommand("generate", "sorted prefix x_1..x_n");
    add_kind(generate, c);
    generate->add_option("--n", c.n, "prefix length")->required();
    add_origin(generate, c);
    add_output(generate, c);

    auto* gaps = app.add_subcommand("gaps", "circular gaps of a prefix");
    add_kind(gaps, c);
    gaps->add_option("--n", c.n, "prefix length")->required();
    add_origin(gaps, c);
    add_output(gaps, c);

    auto* windows = app.add_subcommand("windows", "min / max r-window sums and their ratio");
    auto* discrepancy = app.add_subcommand("discrepancy", "point counts in intervals of length r/n");
    for (auto* cmd : {windows, discrepancy}) {
        add_kind(cmd, c);
        cmd->add_option("--n", c.n, "prefix lengths, e.g. 100..4096 or 2..1024*2")->required();
        cmd->add_option("--r", c.r, "window widths, same syntax")->required();
        add_output(cmd, c);
        cmd->add_option("--jobs", c.jobs, "worker threads")->capture_default_str();
    }
    add_origin(windows, c);
    discrepancy->add_flag("--wrap,!--no-wrap", wrap, "let intervals wrap around 1")->capture_default_str();

    auto* paircorr = app.add_subcommand("paircorr", "pair correlation F_N(s)");
    add_kind(paircorr, c);
    paircorr->add_option("--n", c.n, "point counts N")->required();
    paircorr->add_option("--s", s_text, "scales: integers, ranges or exact values like 1/2")->capture_default_str();
    add_output(paircorr, c);
    paircorr->add_option("--jobs", c.jobs, "worker threads")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run every lemma verifier; JSON report");
    verify->add_option("--t-max", t_max, "dyadic depth")->capture_default_str();
    verify->add_option("--n-max", n_max, "largest prefix")->capture_default_str();
    verify->add_option("--out", c.out, "report path (default: standard output)");

    auto* fit = app.add_subcommand("fit", "smallest constant c bounding a sweep table");
    fit->add_option("--in", in_path, "CSV or JSON rows from windows / discrepancy / paircorr")->required();
    fit->add_option("--quantity", quantity, "ratio_bound | discrepancy_bound | paircorr_bound")->required();
    fit->add_option("--min-r", min_r, "distinct r (or s) values required")->capture_default_str();
    fit->add_option("--out", c.out, "output path (default: standard output)");

    auto* theorem1 = app.add_subcommand("theorem1", "running maxima for the log sequence");
    theorem1->add_option("--n-max", n_max, "last n")->required();
    theorem1->add_option("--n-start", n_start, "first n entering the maxima")->capture_default_str();
    theorem1->add_option("--out", c.out, "output path (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*generate) return run_generate(c);
        if (*gaps) return run_gaps(c);
        if (*windows) return run_windows(c);
        if (*discrepancy) return run_discrepancy(c, wrap);
        if (*paircorr) return run_paircorr(c, s_text);
        if (*verify) return run_verify(t_max, n_max, c.out);
        if (*fit) return run_fit(in_path, quantity, min_r, c.out);
        if (*theorem1) return run_theorem1(n_max, n_start, c.out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
