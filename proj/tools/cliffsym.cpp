#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cliffsym/report.hpp"
#include "cliffsym/sweep.hpp"

namespace {

using namespace cliffsym;

int env_jobs() {
    const char* env = std::getenv("CLIFFSYM_JOBS");
    if (!env) return 1;
    int v = std::atoi(env);
    return v > 0 ? v : 1;
}

std::vector<BladeMask> parse_blade_list(const std::string& text) {
    std::vector<BladeMask> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_blade(item));
    return out;
}

std::vector<int> parse_sign_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "+" || item == "+1") out.push_back(1);
        else if (item == "-" || item == "-1") out.push_back(-1);
        else throw std::invalid_argument("signs must be lists of +/-");
    }
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + out_path);
        f << text;
    }
}

std::pair<int, int> parse_pq_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("expected p,q");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

void print_classification_text(std::ostream& os, const ClassificationReport& r,
                               const SpinorRep& rep) {
    os << "Cl(" << r.sig.p << "," << r.sig.q << ")  type " << r.h_type << "  ring "
       << ring_name(r.ring) << "\n";
    os << "f = " << r.idempotent << "\n";
    os << "K basis: ";
    for (size_t i = 0; i < rep.k_labels.size(); ++i)
        os << (i ? ", " : "") << blade_name(rep.k_labels[i]);
    os << "\n";
    for (int i = 0; i < r.sig.n(); ++i) {
        os << "E" << i + 1 << " =\n"
           << matrix_to_text(matrix_to_strings(rep.gens[i], rep.k_labels, rep.sig));
    }
    os << "W =\n" << matrix_to_text(matrix_to_strings(r.aut.W, rep.k_labels, rep.sig));
    os << "E =\n" << matrix_to_text(matrix_to_strings(r.aut.E, rep.k_labels, rep.sig));
    os << "C =\n" << matrix_to_text(matrix_to_strings(r.aut.C, rep.k_labels, rep.sig));
    os << "abc = " << abc_to_string(r.group.abc) << "  order4 " << r.group.order4 << "  cover "
       << r.group.order8_cover << (r.group.abelian ? "  (non-Cliffordian)" : "  (Cliffordian)")
       << "\n";
    PinDescriptor pin = pin_descriptor(r.sig.p, r.sig.q, r);
    os << "pin: " << pin.name << " ~ " << pin.semidirect << "\n";
    os << "conformance: " << (r.conformance.pass ? "PASS" : "FAIL") << " [" << r.conformance.case_label
       << "]\n";
}

int run_classify(int p, int q, int n_complex, const std::string& idem, const std::string& signs,
                 const std::string& format, const std::string& out) {
    std::ostringstream text;
    Json json;
    bool pass = true;

    if (n_complex >= 0) {
        ComplexAutResult aut = complex_aut(n_complex);
        ComplexPinDescriptor pin = complex_pin(n_complex);
        json = Json{{"n", n_complex},
                    {"aut", complex_aut_to_json(aut)},
                    {"pin", complex_pin_to_json(pin)}};
        text << "C_" << n_complex << ": group " << aut.group.order4 << ", cover "
             << aut.group.order8_cover << ", abc " << abc_to_string(aut.group.abc)
             << " (complex-normalized)\n"
             << "pin: " << pin.name << " ~ " << pin.semidirect << "\n";
    } else {
        StructureInfo info = mod8_type(p, q);
        if (!info.simple) {
            if (!idem.empty())
                throw std::invalid_argument("idempotent override applies to simple types only");
            SemisimpleReport rep = classify_semisimple(p, q);
            pass = rep.pass;
            json = semisimple_to_json(rep);
            text << "Cl(" << p << "," << q << ")  type " << rep.h_type << "  ring "
                 << ring_name(rep.ring) << "  (semisimple)\n";
            for (const auto& v : rep.variants) {
                text << "variant " << v.name << ": Cl(" << v.summand.p << "," << v.summand.q
                     << ") (+) Cl(" << v.summand.p << "," << v.summand.q << ")\n";
                for (const auto& r : v.reports)
                    text << "  f = " << r.idempotent << "  abc " << abc_to_string(r.group.abc)
                         << "  cover " << r.group.order8_cover << "  "
                         << (r.conformance.pass ? "PASS" : "FAIL") << "\n";
            }
            text << "admissible per theorem: ";
            for (size_t i = 0; i < rep.admissible.size(); ++i)
                text << (i ? ", " : "") << abc_to_string(rep.admissible[i].abc);
            text << "\nconformance: " << (rep.pass ? "PASS" : "FAIL") << "\n";
        } else {
            AlgebraSig sig(p, q);
            std::vector<IdempotentSpec> specs;
            if (!idem.empty()) {
                IdempotentSpec spec;
                spec.blades = parse_blade_list(idem);
                spec.signs = signs.empty() ? std::vector<int>(spec.blades.size(), 1)
                                           : parse_sign_list(signs);
                specs.push_back(spec);
            } else {
                for (const auto& fam : commuting_blade_sets(sig)) {
                    int k = static_cast<int>(fam.size());
                    for (int bits = 0; bits < (1 << k); ++bits)
                        specs.push_back(spec_from_family(fam, bits));
                }
            }
            Json arr = Json::array();
            for (const auto& spec : specs) {
                SpinorRep rep = build_spinor_rep(sig, spec);
                ClassificationReport r = classify_rep(rep);
                pass = pass && r.conformance.pass;
                arr.push_back(classification_to_json(r, rep));
                print_classification_text(text, r, rep);
                text << "\n";
            }
            json = arr;
        }
    }

    if (format == "json") emit(json.dump(2) + "\n", out);
    else emit(text.str(), out);
    return pass ? 0 : 2;
}

int run_sweep_cmd(int max_n, int jobs, const std::string& format, const std::string& out) {
    SweepOptions opt;
    opt.max_n = max_n;
    opt.jobs = jobs;
    SweepResult res = run_sweep(opt);
    if (format == "json") {
        emit(sweep_to_json(res).dump(2) + "\n", out);
    } else {
        std::ostringstream os;
        os << "sweep p+q <= " << res.max_n << ": " << res.total_reports
           << " representations, failures " << res.failures << "\n";
        for (const auto& row : res.rows) {
            os << "Cl(" << row.sig.p << "," << row.sig.q << ") type " << row.info.h_type << " ring "
               << ring_name(row.info.ring);
            if (row.semisimple) {
                os << " semisimple " << (row.semisimple->pass ? "PASS" : "FAIL");
            } else {
                std::map<std::string, long> census;
                for (const auto& r : row.reports) census[r.group.order8_cover] += 1;
                os << " {";
                bool first = true;
                for (const auto& [cover, cnt] : census) {
                    os << (first ? "" : ", ") << cover << " x" << cnt;
                    first = false;
                }
                os << "} " << (row.pass() ? "PASS" : "FAIL");
            }
            os << "\n";
        }
        emit(os.str(), out);
    }
    return res.all_pass() ? 0 : 2;
}

int run_tensor(const std::string& a_txt, const std::string& b_txt, const std::string& format,
               const std::string& out) {
    auto [pa, qa] = parse_pq_pair(a_txt);
    auto [pb, qb] = parse_pq_pair(b_txt);
    AlgebraSig a(pa, qa), b(pb, qb);
    ChevalleyCheck chk = verify_chevalley(a, b);
    if (format == "json") {
        emit(chevalley_to_json(a, b, chk).dump(2) + "\n", out);
    } else {
        std::ostringstream os;
        os << "Cl(" << pa << "," << qa << ") (x) Cl(" << pb << "," << qb << ") -> Cl(" << pa + pb
           << "," << qa + qb << "): " << (chk.ok ? "verified" : ("FAILED: " + chk.detail)) << "\n";
        os << "class " << bw_class_real(pa, qa).h << " + " << bw_class_real(pb, qb).h << " = "
           << bw_class_real(pa + pb, qa + qb).h << " (mod 8)\n";
        emit(os.str(), out);
    }
    return chk.ok ? 0 : 2;
}

int run_clock(const std::string& kind, const std::string& format, const std::string& out) {
    ClockTable t = trautman_clock(kind);
    if (format == "json") emit(clock_to_json(t).dump(2) + "\n", out);
    else emit(clock_to_text(t), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cliffsym: discrete-symmetry classification of Clifford algebras"};
    app.require_subcommand(1);

    int p = 0, q = 0, n_complex = -1;
    std::string idem, signs, format = "text", out;
    int max_n = 8, jobs = env_jobs();
    std::string tensor_a, tensor_b, kind = "real";

    CLI::App* classify = app.add_subcommand("classify", "classify one algebra");
    classify->add_option("--p", p, "positive-square generators");
    classify->add_option("--q", q, "negative-square generators");
    classify->add_option("--n", n_complex, "complex algebra C_n (even n)");
    classify->add_option("--idempotent", idem, "idempotent blades, e.g. e1,e34");
    classify->add_option("--signs", signs, "idempotent signs, e.g. +,+");
    classify->add_option("--format", format, "text|json");
    classify->add_option("--out", out, "output path");

    CLI::App* sweep = app.add_subcommand("sweep", "exhaustive classification for p+q <= N");
    sweep->add_option("--max-n", max_n, "maximum p+q");
    sweep->add_option("--jobs", jobs, "worker threads (env CLIFFSYM_JOBS)");
    sweep->add_option("--format", format, "text|json");
    sweep->add_option("--out", out, "output path");

    CLI::App* tensor = app.add_subcommand("tensor", "graded tensor product verification");
    tensor->add_option("--a", tensor_a, "left operand p,q")->required();
    tensor->add_option("--b", tensor_b, "right operand p,q")->required();
    tensor->add_option("--format", format, "text|json");
    tensor->add_option("--out", out, "output path");

    CLI::App* clock = app.add_subcommand("clock", "Trautman clock table");
    clock->add_option("--kind", kind, "real|complex");
    clock->add_option("--format", format, "text|json");
    clock->add_option("--out", out, "output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return run_classify(p, q, n_complex, idem, signs, format, out);
        if (sweep->parsed()) return run_sweep_cmd(max_n, jobs, format, out);
        if (tensor->parsed()) return run_tensor(tensor_a, tensor_b, format, out);
        if (clock->parsed()) return run_clock(kind, format, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
