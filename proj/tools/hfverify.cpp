// Command-line front end: list the identity catalog, verify identities on
// parameter grids (exact or interval backend), fuzz random rational
// parameters, and emit result tables.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "hf/report.hpp"

namespace {

using hf::Binding;
using hf::GridSpec;
using hf::OutputFormat;
using hf::Rational;

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(Rational::from_string(item));
    }
    return out;
}

struct CommonOpts {
    std::string id;
    bool all = false;
    long n_max = 10;
    std::string b_csv = "1,2,3";
    std::string c_csv = "1,2,3";
    long m_max = 3;
    std::string backend = "exact";
    long prec_bits = 64;
    std::string format = "human";
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_grid) {
    cmd->add_option("--id", o.id, "identity id or id prefix");
    cmd->add_flag("--all", o.all, "select every identity");
    if (with_grid) {
        cmd->add_option("--n-max", o.n_max, "largest n in the grid");
        cmd->add_option("--b", o.b_csv, "comma-separated rational b values");
        cmd->add_option("--c", o.c_csv, "comma-separated rational c values");
        cmd->add_option("--m-max", o.m_max, "largest m for the m-family");
        cmd->add_option("--backend", o.backend, "exact | interval | both")
            ->check(CLI::IsMember({"exact", "interval", "both"}));
    }
    cmd->add_option("--prec", o.prec_bits, "interval precision in bits (>= 8)")
        ->check(CLI::Range(8L, 1L << 20));
    cmd->add_option("--format", o.format, "human | csv | jsonl")
        ->check(CLI::IsMember({"human", "csv", "jsonl"}));
    cmd->add_option("--out", o.out_path, "write the report stream to a file");
}

std::vector<std::string> resolve_or_die(const CommonOpts& o) {
    if (o.all) return hf::Registry::instance().resolve("all");
    if (o.id.empty()) throw CLI::ValidationError("--id or --all is required");
    auto ids = hf::Registry::instance().resolve(o.id);
    if (ids.empty()) {
        std::ostringstream msg;
        msg << "unknown identity '" << o.id << "'; valid ids include:";
        int shown = 0;
        for (const auto& d : hf::list_identities()) {
            msg << ' ' << d.id;
            if (++shown == 8) break;
        }
        msg << " ... (see `hfverify list`)";
        throw hf::UnknownIdentityError(msg.str());
    }
    return ids;
}

GridSpec grid_from(const CommonOpts& o) {
    GridSpec g;
    g.n_min = 0;
    g.n_max = o.n_max;
    g.b_values = parse_rational_list(o.b_csv);
    g.c_values = parse_rational_list(o.c_csv);
    for (long m = 1; m <= o.m_max; ++m) g.m_values.push_back(m);
    return g;
}

struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw hf::DomainError("cannot open output file: " + path);
            os = &file;
        }
    }
};

int status_to_exit(const std::vector<hf::VerificationReport>& reps) {
    for (const auto& r : reps)
        if (!r.ok()) return 1;
    return 0;
}

int run_verify(const CommonOpts& o, bool table_mode) {
    auto ids = resolve_or_die(o);
    GridSpec grid = grid_from(o);
    OutputFormat fmt = hf::parse_format(o.format);
    Sink sink(o.out_path);

    std::vector<hf::VerificationReport> reports;
    bool header = true;
    for (const auto& id : ids) {
        const auto& d = hf::get_identity(id);
        if (o.backend == "exact" || o.backend == "both" || table_mode) {
            reports.push_back(hf::verify_exact(id, grid));
        }
        if (!table_mode && (o.backend == "interval" || o.backend == "both")) {
            if (has_backend(d.backends, hf::Backend::Interval)) {
                auto bindings = hf::enumerate_bindings(d, grid);
                reports.push_back(
                    hf::verify_interval(id, bindings, hf::Precision::bits(o.prec_bits)));
            }
        }
    }
    for (auto& rep : reports) {
        if (table_mode) {
            // a table lists the evaluated grid; pole-filtered bindings are dropped
            std::erase_if(rep.instances, [](const hf::InstanceResult& i) {
                return i.status == hf::Status::SkippedPole;
            });
        }
        if (fmt == OutputFormat::Human && table_mode) {
            for (const auto& ins : rep.instances) {
                *sink.os << rep.id << "  " << ins.binding.to_string() << "  " << ins.lhs_text
                         << (ins.status == hf::Status::Pass ? " = " : " ? ") << ins.rhs_text
                         << "  " << status_name(ins.status) << '\n';
            }
        } else {
            hf::write_report(*sink.os, rep, fmt, header);
        }
        header = false;
        std::cerr << rep.summary() << " (" << static_cast<long>(rep.wall_ms) << " ms)\n";
    }
    return status_to_exit(reports);
}

long draw_in(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

int run_fuzz(const CommonOpts& o, unsigned long seed, long count) {
    auto ids = resolve_or_die(o);
    OutputFormat fmt = hf::parse_format(o.format);
    Sink sink(o.out_path);

    std::mt19937_64 rng(seed);
    std::vector<hf::VerificationReport> reports;
    bool header = true;
    for (const auto& id : ids) {
        const auto& d = hf::get_identity(id);
        std::vector<Binding> bindings;
        long redraw_failures = 0;
        for (long i = 0; i < count; ++i) {
            bool found = false;
            for (int attempt = 0; attempt < 1000; ++attempt) {
                Binding t;
                t.n = draw_in(rng, 1, std::max<long>(1, o.n_max));
                if (d.params.uses_b)
                    t.b = Rational(draw_in(rng, -40, 40), draw_in(rng, 1, 9));
                if (d.params.uses_c)
                    t.c = Rational(draw_in(rng, -40, 40), draw_in(rng, 1, 9));
                if (d.params.uses_m) t.m = draw_in(rng, 1, o.m_max);
                if (d.domain(t)) {
                    bindings.push_back(t);
                    found = true;
                    break;
                }
            }
            if (!found) ++redraw_failures;
        }
        auto rep = hf::verify_interval(id, bindings, hf::Precision::bits(o.prec_bits));
        if (redraw_failures > 0)
            rep.instances.push_back({Binding{}, hf::Status::Unsupported, "", "", {}, {},
                                     std::to_string(redraw_failures) +
                                         " draws hit the redraw cap"});
        hf::write_report(*sink.os, rep, fmt, header);
        header = false;
        std::cerr << rep.summary() << " (" << static_cast<long>(rep.wall_ms) << " ms)\n";
        reports.push_back(std::move(rep));
    }
    return status_to_exit(reports);
}

int run_list(const CommonOpts& o) {
    Sink sink(o.out_path);
    hf::write_registry(*sink.os, hf::parse_format(o.format));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification engine for harmonic-number binomial identities"};
    app.require_subcommand(1);

    CommonOpts list_o, verify_o, fuzz_o, table_o;
    unsigned long seed = 0;
    long count = 100;

    CLI::App* list_cmd = app.add_subcommand("list", "list the identity catalog");
    add_common(list_cmd, list_o, false);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "verify identities on a parameter grid");
    add_common(verify_cmd, verify_o, true);

    CLI::App* fuzz_cmd =
        app.add_subcommand("fuzz", "interval-verify at seeded random rational parameters");
    add_common(fuzz_cmd, fuzz_o, true);
    fuzz_cmd->add_option("--seed", seed, "deterministic generator seed");
    fuzz_cmd->add_option("--count", count, "bindings per identity")->check(CLI::Range(1L, 1000000L));

    CLI::App* table_cmd =
        app.add_subcommand("table", "emit one row per (identity, binding)");
    add_common(table_cmd, table_o, true);

    try {
        app.parse(argc, argv);
        if (list_cmd->parsed()) return run_list(list_o);
        if (verify_cmd->parsed()) return run_verify(verify_o, false);
        if (fuzz_cmd->parsed()) return run_fuzz(fuzz_o, seed, count);
        if (table_cmd->parsed()) return run_verify(table_o, true);
        return 2;
    } catch (const CLI::ParseError& e) {
        std::cerr << (e.get_name() == "CallForHelp" ? "" : "error: ");
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const hf::UnknownIdentityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const hf::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
