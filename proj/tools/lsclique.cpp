#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lsclique/enumerate.hpp"
#include "lsclique/link_stream.hpp"
#include "lsclique/oracle.hpp"
#include "lsclique/parallel.hpp"
#include "lsclique/stats_json.hpp"

namespace {

using namespace lsclique;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// One output line: t0, t1, then member labels in bytewise order.
struct OutputRow {
    Timestamp t0;
    Timestamp t1;
    std::vector<std::string> labels;

    friend bool operator<(const OutputRow& a, const OutputRow& b) {
        if (a.t0 != b.t0) return a.t0 < b.t0;
        if (a.t1 != b.t1) return a.t1 < b.t1;
        return a.labels < b.labels;
    }
};

OutputRow make_row(const TimedClique& clique, const VertexTable& vertices) {
    OutputRow row{clique.t0, clique.t1, {}};
    row.labels.reserve(clique.members.size());
    for (VertexId v : clique.members) row.labels.push_back(vertices.label(v));
    std::sort(row.labels.begin(), row.labels.end());
    return row;
}

void print_row(std::ostream& out, const OutputRow& row) {
    out << row.t0 << ' ' << row.t1;
    for (const std::string& label : row.labels) out << ' ' << label;
    out << '\n';
}

struct RunConfig {
    std::string input;
    StreamConfig stream;
    bool no_pivot = false;
    unsigned threads = 1;
    bool sorted = false;
    std::string stats_path;
    std::string out_path;
    bool oracle = false;
    bool check = false;
    bool force = false;
};

int check_against_oracle(const LinkStream& stream, const RunConfig& cfg) {
    EnumOptions options;
    options.use_pivot = !cfg.no_pivot;
    std::set<TimedClique> emitted;
    auto sink = [&](const TimedClique& c) { emitted.insert(c); };
    if (cfg.threads > 1) {
        parallel_enumerate(stream, cfg.threads, options, sink);
    } else {
        enumerate_maximal_cliques(stream, options, sink);
    }

    OracleOptions oracle_options;
    oracle_options.force = cfg.force;
    std::set<TimedClique> expected = oracle_enumerate(stream, oracle_options);

    if (emitted == expected) {
        std::cout << "oracle match: " << expected.size() << " cliques\n";
        return 0;
    }
    std::cerr << "oracle mismatch: emitted " << emitted.size() << " cliques, oracle found "
              << expected.size() << "\n";
    const VertexTable& vertices = stream.vertices();
    for (const TimedClique& c : expected) {
        if (!emitted.count(c)) {
            std::cerr << "  missing: ";
            print_row(std::cerr, make_row(c, vertices));
        }
    }
    for (const TimedClique& c : emitted) {
        if (!expected.count(c)) {
            std::cerr << "  extra:   ";
            print_row(std::cerr, make_row(c, vertices));
        }
    }
    return 1;
}

int run(const RunConfig& cfg) {
    LinkStream stream = load_stream(read_file(cfg.input), cfg.stream);

    if (cfg.check) return check_against_oracle(stream, cfg);

    std::ofstream out_file;
    std::ostream* out = &std::cout;
    if (!cfg.out_path.empty()) {
        out_file.open(cfg.out_path, std::ios::binary);
        if (!out_file) throw std::runtime_error("cannot write '" + cfg.out_path + "'");
        out = &out_file;
    }
    const VertexTable& vertices = stream.vertices();

    if (cfg.oracle) {
        OracleOptions oracle_options;
        oracle_options.force = cfg.force;
        std::vector<OutputRow> rows;
        for (const TimedClique& c : oracle_enumerate(stream, oracle_options))
            rows.push_back(make_row(c, vertices));
        if (cfg.sorted) std::sort(rows.begin(), rows.end());
        for (const OutputRow& row : rows) print_row(*out, row);
        return 0;
    }

    EnumOptions options;
    options.use_pivot = !cfg.no_pivot;

    std::vector<OutputRow> rows;
    CliqueSink sink;
    if (cfg.sorted) {
        sink = [&](const TimedClique& c) { rows.push_back(make_row(c, vertices)); };
    } else {
        sink = [&](const TimedClique& c) { print_row(*out, make_row(c, vertices)); };
    }

    EnumCounters counters;
    std::vector<double> worker_wall_times;
    if (cfg.threads > 1) {
        ParallelResult result = parallel_enumerate(stream, cfg.threads, options, sink);
        counters = result.counters;
        worker_wall_times = result.worker_wall_times;
    } else {
        counters = enumerate_maximal_cliques(stream, options, sink);
    }

    if (cfg.sorted) {
        std::sort(rows.begin(), rows.end());
        for (const OutputRow& row : rows) print_row(*out, row);
    }
    out->flush();
    if (!*out) throw std::runtime_error("write failed");

    if (!cfg.stats_path.empty()) {
        std::ofstream stats(cfg.stats_path, std::ios::binary);
        if (!stats) throw std::runtime_error("cannot write '" + cfg.stats_path + "'");
        stats << stats_to_json(counters, worker_wall_times);
    }
    return 0;
}

struct BenchDataset {
    std::string name;
    std::string url;
    std::string file;
};

const std::vector<BenchDataset>& bench_datasets() {
    static const std::vector<BenchDataset> datasets = {
        {"hypertext",
         "http://www.sociopatterns.org/wp-content/uploads/2011/07/ht09_contact_list.dat.gz",
         "ht09_contact_list.dat"},
        {"highschool11",
         "http://www.sociopatterns.org/wp-content/uploads/2015/07/thiers_2011.csv.gz",
         "thiers_2011.csv"},
    };
    return datasets;
}

// Contact lists arrive as "t i j [...]": keep the first three fields of each
// line and feed them through the instantaneous parser.
std::string adapt_contact_list(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    std::size_t pos = 0;
    while (pos < raw.size()) {
        std::size_t eol = raw.find('\n', pos);
        if (eol == std::string::npos) eol = raw.size();
        std::string line = raw.substr(pos, eol - pos);
        pos = eol + 1;
        for (char& ch : line)
            if (ch == ',' || ch == ';' || ch == '\t' || ch == '\r') ch = ' ';
        std::istringstream fields(line);
        std::string t, u, v;
        if (!(fields >> t >> u >> v)) continue;
        if (t[0] == '#') continue;
        out += t;
        out += ' ';
        out += u;
        out += ' ';
        out += v;
        out += '\n';
    }
    return out;
}

bool fetch_dataset(const BenchDataset& dataset, const std::string& data_dir) {
    std::error_code ec;
    std::filesystem::create_directories(data_dir, ec);
    const std::string target = data_dir + "/" + dataset.file;
    const std::string archive = target + ".gz";
    const std::string command =
        "curl -fsSL '" + dataset.url + "' -o '" + archive + "' && gzip -df '" + archive + "'";
    return std::system(command.c_str()) == 0 && std::filesystem::exists(target);
}

int run_bench(const std::string& data_dir, std::vector<std::string> names) {
    if (names.empty())
        for (const BenchDataset& d : bench_datasets()) names.push_back(d.name);

    int rc = 0;
    for (const std::string& name : names) {
        const BenchDataset* dataset = nullptr;
        for (const BenchDataset& d : bench_datasets())
            if (d.name == name) dataset = &d;
        if (dataset == nullptr) {
            std::cerr << "bench: unknown dataset '" << name << "'\n";
            rc = 2;
            continue;
        }
        const std::string path = data_dir + "/" + dataset->file;
        if (!std::filesystem::exists(path) && !fetch_dataset(*dataset, data_dir)) {
            std::cerr << "bench: could not fetch " << dataset->url << "; place " << dataset->file
                      << " under " << data_dir << "/ and rerun\n";
            rc = 1;
            continue;
        }
        const std::string adapted = adapt_contact_list(read_file(path));
        for (Timestamp delta : {Timestamp{0}, Timestamp{125}, Timestamp{3125}}) {
            StreamConfig config;
            config.format = InputFormat::instantaneous;
            config.delta = delta;
            LinkStream stream = load_stream(adapted, config);
            EnumCounters counters =
                enumerate_maximal_cliques(stream, EnumOptions{}, [](const TimedClique&) {});
            std::cout << name << " delta=" << delta << ": m=" << counters.m
                      << " d=" << counters.max_degree << " alpha=" << counters.alpha
                      << " q=" << counters.max_clique_size << " wall_time=" << counters.wall_time
                      << "s\n";
        }
    }
    return rc;
}

std::string default_data_dir() {
    const char* env = std::getenv("LSCLIQUE_DATA_DIR");
    return env != nullptr && *env != '\0' ? env : "data";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"enumerate all maximal cliques of an interval link stream"};
    app.require_subcommand(0, 1);

    RunConfig cfg;
    std::string format;
    auto* input_opt = app.add_option("input", cfg.input, "link stream file");
    auto* format_opt = app.add_option("--format", format, "input line format")
                           ->check(CLI::IsMember({"interval", "instantaneous"}));
    auto* delta_opt =
        app.add_option("--delta", cfg.stream.delta, "duration added to each instantaneous link");
    app.add_flag("--no-pivot", cfg.no_pivot, "disable pivot-based candidate pruning");
    app.add_option("--threads", cfg.threads, "worker count (begin instants are range-split)");
    app.add_flag("--sorted", cfg.sorted, "buffer and sort output by (t0, t1, members)");
    app.add_option("--stats", cfg.stats_path, "write run counters as JSON");
    app.add_option("-o,--output", cfg.out_path, "output file (default: stdout)");
    app.add_flag("--oracle", cfg.oracle, "emit the brute-force reference enumeration instead");
    app.add_flag("--check", cfg.check, "compare the enumerator against the brute-force reference");
    app.add_flag("--force", cfg.force, "override the reference enumerator's size guard");

    auto* bench = app.add_subcommand("bench", "reproduce contact-dataset headline counts");
    std::string data_dir = default_data_dir();
    std::vector<std::string> bench_names;
    bench->add_option("--data-dir", data_dir, "dataset cache directory");
    bench->add_option("datasets", bench_names, "dataset names (default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (bench->parsed()) return run_bench(data_dir, bench_names);

        if (input_opt->count() == 0) {
            std::cerr << "error: input file required\n";
            return 2;
        }
        if (format_opt->count() == 0) {
            std::cerr << "error: --format is required\n";
            return 2;
        }
        cfg.stream.format =
            format == "interval" ? InputFormat::interval : InputFormat::instantaneous;
        if (delta_opt->count() > 0 && cfg.stream.format == InputFormat::interval) {
            std::cerr << "error: --delta requires --format instantaneous\n";
            return 2;
        }
        if (cfg.stream.delta < 0) {
            std::cerr << "error: --delta must be nonnegative\n";
            return 2;
        }
        if (cfg.threads == 0) {
            std::cerr << "error: --threads must be positive\n";
            return 2;
        }
        return run(cfg);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
