// bifc: enumeration, moment-cumulant conversion, verification suites and
// SVG diagrams for two-faced noncrossing combinatorics.

#include "bifc/bipartition.hpp"
#include "bifc/cumulants.hpp"
#include "bifc/json_io.hpp"
#include "bifc/svg.hpp"
#include "bifc/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxLen = 14;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write \"" + path + "\"");
    out << text;
}

struct EnumerateJob {
    std::string type, word, alphabet, cls = "nc", format = "count", output;
};

int run_enumerate(const EnumerateJob& job) {
    if (job.type.empty() == job.word.empty())
        throw std::invalid_argument("give exactly one of --type and --word");
    bifc::TranslucentWord t;
    if (!job.type.empty()) {
        t = bifc::TranslucentWord::parse(job.type);
    } else {
        t = bifc::type_of(bifc::parse_word(bifc::Alphabet::parse(job.alphabet), job.word));
    }
    bifc::BipartitionClass c = bifc::parse_class(job.cls);
    std::vector<bifc::LabeledBipartition> list;
    if (c == bifc::BipartitionClass::monotone) {
        list = bifc::enumerate_monotone(t);
    } else {
        for (auto& pi : bifc::enumerate(t, c)) list.push_back({std::move(pi), {}});
    }
    if (job.format == "count") {
        write_output(job.output, std::to_string(list.size()) + "\n");
    } else if (job.format == "json") {
        write_output(job.output, bifc::bipartitions_to_json(list));
    } else if (job.format == "svg") {
        write_output(job.output, bifc::render_svg(list));
    } else {
        throw std::invalid_argument("unknown format \"" + job.format + "\"");
    }
    return 0;
}

struct ConvertJob {
    std::string input, output, from, to;
    int max_len = -1;
};

int run_convert(const ConvertJob& job) {
    std::string text = read_file(job.input);
    bool to_moments = job.to == "moments";
    if (!to_moments) bifc::parse_family(job.to);
    bifc::MomentData moments;
    std::optional<bifc::CumulantData> cumulants;
    int longest = 0;
    if (job.from == "moments") {
        moments = bifc::moments_from_json(text);
        longest = bifc::longest_word(moments.moments);
    } else {
        cumulants = bifc::cumulants_from_json(text);
        if (bifc::family_name(cumulants->family) != job.from)
            throw std::invalid_argument("input holds " + bifc::family_name(cumulants->family) +
                                        " cumulants but --from is " + job.from);
        longest = bifc::longest_word(cumulants->values);
    }
    int max_len = job.max_len >= 0 ? job.max_len : longest;
    if (max_len > kMaxLen) throw std::invalid_argument("--max-len is limited to " + std::to_string(kMaxLen));
    if (cumulants) {
        if (!to_moments && bifc::family_name(cumulants->family) == job.to) {
            write_output(job.output, bifc::cumulants_to_json(*cumulants));
            return 0;
        }
        moments = bifc::cumulants_to_moments(*cumulants, max_len);
    }
    if (to_moments) {
        write_output(job.output, bifc::moments_to_json(moments));
    } else {
        write_output(job.output,
                     bifc::cumulants_to_json(bifc::moments_to_cumulants(moments, bifc::parse_family(job.to), max_len)));
    }
    return 0;
}

struct VerifyJob {
    std::string suite;
    int max_len = 4;
    std::uint64_t seed = 42;
};

int run_verify(const VerifyJob& job) {
    if (job.max_len > kMaxLen) throw std::invalid_argument("--max-len is limited to " + std::to_string(kMaxLen));
    std::vector<std::string> suites =
        job.suite == "all" ? bifc::suite_names() : std::vector<std::string>{job.suite};
    bool ok = true;
    for (const auto& name : suites) {
        bifc::SuiteResult r = bifc::run_suite(name, job.max_len, job.seed);
        std::cout << "suite " << r.suite << " (max-len " << job.max_len << ", seed " << job.seed
                  << "): " << (r.ok ? "PASS" : "FAIL") << " (" << r.checks << " checks)\n";
        if (!r.ok) std::cout << "  first counterexample: " << r.counterexample << "\n";
        ok = ok && r.ok;
    }
    return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bifc: two-faced noncrossing combinatorics with exact rationals"};
    app.require_subcommand(1);

    EnumerateJob ej;
    auto* en = app.add_subcommand("enumerate", "list incomplete bipartitions of a type");
    en->add_option("--type", ej.type, "translucent word ALPHA,MASK");
    en->add_option("--word", ej.word, "incomplete word, e.g. \"a L b\" (needs --alphabet)");
    en->add_option("--alphabet", ej.alphabet, "variable declaration, e.g. \"a:L,b:R\"");
    en->add_option("--class", ej.cls, "all | nc | interval | monotone | shaded_nc")->capture_default_str();
    en->add_option("--format", ej.format, "count | json | svg")->capture_default_str();
    en->add_option("--output", ej.output, "output file (default stdout)");

    ConvertJob cj;
    auto* cv = app.add_subcommand("convert", "convert between moments and cumulants");
    cv->add_option("--input", cj.input, "input JSON file")->required();
    cv->add_option("--output", cj.output, "output file (default stdout)");
    cv->add_option("--from", cj.from, "moments | bifree | biboolean | bimonotone")->required();
    cv->add_option("--to", cj.to, "moments | bifree | biboolean | bimonotone")->required();
    cv->add_option("--max-len", cj.max_len, "longest word to convert (default: longest input word)");

    VerifyJob vj;
    auto* vf = app.add_subcommand("verify", "run an identity-checking suite");
    vf->add_option("--suite", vj.suite, "codendriform | dendriform | exchange | exponentials | prelie | "
                                        "roundtrip | single_faced | all")
        ->required();
    vf->add_option("--max-len", vj.max_len, "largest word length")->capture_default_str();
    vf->add_option("--seed", vj.seed, "random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (en->parsed()) return run_enumerate(ej);
        if (cv->parsed()) return run_convert(cj);
        if (vf->parsed()) return run_verify(vj);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
