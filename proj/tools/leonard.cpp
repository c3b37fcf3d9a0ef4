// Command-line front end: certify systems from files, generate instances,
// and reconstruct spectra. Exit codes: 0 success / certified, 1 negative
// certification verdict, 2 malformed input or invalid parameters.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "leonard/families.hpp"
#include "leonard/io.hpp"
#include "leonard/spectral.hpp"

namespace {

int run_check(const std::string& path, bool identities, bool oracle,
              const std::string& report_path) {
    leonard::BipartiteSystem sys = leonard::read_system_file(path);
    leonard::ReportOptions opts;
    opts.identities = identities;
    opts.oracle = oracle;
    nlohmann::ordered_json report = leonard::build_report(sys, opts);
    std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out)
            throw leonard::Error("cannot write '" + report_path + "'");
        out << text;
    }
    return report.at("exit_status").get<int>();
}

int run_generate(const std::string& family, int d, const std::string& field_name,
                 unsigned long prime, std::uint64_t seed, const std::string& out_path) {
    leonard::FieldSpec field = prime != 0 ? leonard::FieldSpec::prime(prime)
                                          : leonard::FieldSpec::rational();
    if (prime == 0 && field_name != "rational")
        throw leonard::PreconditionError("unknown field '" + field_name + "'");

    leonard::BipartiteSystem sys = [&] {
        if (family == "krawtchouk")
            return leonard::krawtchouk(d, field);
        if (family == "random")
            return leonard::random_system(d, field, seed);
        throw leonard::PreconditionError("unknown family '" + family + "'");
    }();

    if (out_path.empty())
        std::cout << leonard::system_to_json(sys).dump(2) << "\n";
    else
        leonard::write_system_file(sys, out_path);
    return 0;
}

int run_reconstruct(const std::string& path, int j, const std::string& theta_text, bool verify) {
    leonard::BipartiteSystem sys = leonard::read_system_file(path);
    leonard::Scalar theta_j = leonard::parse_scalar(theta_text, sys.field());
    std::vector<leonard::Scalar> theta =
        leonard::reconstruct_theta(sys.theta_star(), j, theta_j);

    std::string line;
    for (const leonard::Scalar& t : theta)
        line += (line.empty() ? "" : " ") + t.str();
    std::cout << line << "\n";

    if (verify) {
        leonard::SpectralData sp = leonard::eigendecompose(sys);
        std::vector<leonard::Scalar> expect = sp.theta;
        std::vector<leonard::Scalar> got = theta;
        auto by_value = [](const leonard::Scalar& a, const leonard::Scalar& b) {
            return leonard::Scalar::cmp(a, b) < 0;
        };
        std::sort(expect.begin(), expect.end(), by_value);
        std::sort(got.begin(), got.end(), by_value);
        if (expect != got) {
            std::cerr << "verification failed: reconstructed spectrum differs from the"
                         " eigendecomposition\n";
            return 1;
        }
        std::cout << "verified against the eigendecomposition\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    if (const char* cap = std::getenv("LEONARD_PRIME_CAP")) {
        try {
            leonard::set_prime_cap(std::stoul(cap));
        } catch (const std::exception&) {
            std::cerr << "invalid LEONARD_PRIME_CAP value '" << cap << "'\n";
            return 2;
        }
    }

    CLI::App app{"Exact certification of bipartite tridiagonal systems"};
    app.require_subcommand(1);

    std::string check_path, report_path;
    bool identities = false, oracle = false;
    CLI::App* check = app.add_subcommand("check", "certify a system file");
    check->add_option("file", check_path, "system file (JSON)")->required();
    check->add_flag("--identities", identities, "run the identity verifier suites");
    check->add_flag("--oracle", oracle, "cross-check with the exhaustive oracle (d <= 4)");
    check->add_option("--report", report_path, "also write the report to this path");

    std::string family, field_name = "rational", gen_out;
    int gen_d = 3;
    unsigned long gen_prime = 0;
    std::uint64_t gen_seed = 0;
    CLI::App* generate = app.add_subcommand("generate", "write an instance file");
    generate->add_option("family", family, "krawtchouk | random")->required();
    generate->add_option("--d", gen_d, "diameter");
    generate->add_option("--field", field_name, "rational (default)");
    generate->add_option("--prime", gen_prime, "use GF(p) with this modulus");
    generate->add_option("--seed", gen_seed, "seed for the random family");
    generate->add_option("--out", gen_out, "output path (stdout when absent)");

    std::string rec_path, rec_theta;
    int rec_j = 0;
    bool rec_verify = false;
    CLI::App* reconstruct = app.add_subcommand("reconstruct", "recover the spectrum from theta*");
    reconstruct->add_option("file", rec_path, "system file (JSON)")->required();
    reconstruct->add_option("--j", rec_j, "index of the known eigenvalue")->required();
    reconstruct->add_option("--theta", rec_theta, "value of theta_j")->required();
    reconstruct->add_flag("--verify", rec_verify, "compare against the eigendecomposition");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed())
            return run_check(check_path, identities, oracle, report_path);
        if (generate->parsed())
            return run_generate(family, gen_d, field_name, gen_prime, gen_seed, gen_out);
        if (reconstruct->parsed())
            return run_reconstruct(rec_path, rec_j, rec_theta, rec_verify);
    } catch (const leonard::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const leonard::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
