#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "csum/completion.hpp"
#include "csum/io.hpp"
#include "csum/operators.hpp"
#include "csum/oracle.hpp"

namespace {

// exit codes: 0 success, 1 inconsistency, 2 parse/usage error, 3 unsupported
constexpr int kExitInconsistent = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw csum::error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

csum::Flavor flavor_of(bool balanced) {
    return balanced ? csum::Flavor::balanced : csum::Flavor::unbalanced;
}

struct CheckArgs {
    std::string target_path;
    std::string matrix_path;
    bool balanced = false;
};

struct CompleteArgs : CheckArgs {
    bool count = false;
    bool all = false;
    bool verbose = false;
};

int run_check(const CheckArgs& args) {
    auto a = csum::io::parse_partial(read_file(args.matrix_path));
    auto b = csum::io::parse_dense(read_file(args.target_path));
    auto outcome = csum::complete(a, b, flavor_of(args.balanced));
    if (outcome.consistent) {
        std::cout << "consistent\n";
        return 0;
    }
    auto graph = csum::build_graph(a);
    std::cout << "cycle " << csum::format_cycle(graph, *outcome.violation) << " sum "
              << outcome.violation->sum << '\n';
    return kExitInconsistent;
}

int run_complete(const CompleteArgs& args) {
    auto a = csum::io::parse_partial(read_file(args.matrix_path));
    auto b = csum::io::parse_dense(read_file(args.target_path));
    const csum::Flavor flavor = flavor_of(args.balanced);
    auto outcome = csum::complete(a, b, flavor);

    if (args.verbose) {
        std::cerr << "components: " << outcome.component_count << '\n';
        std::cerr << "unique: " << (outcome.unique ? "yes" : "no") << '\n';
    }
    if (!outcome.consistent) {
        auto graph = csum::build_graph(a);
        std::cerr << "inconsistent: cycle " << csum::format_cycle(graph, *outcome.violation)
                  << " sum " << outcome.violation->sum << '\n';
        if (args.count)
            std::cout << "0\n";
        return kExitInconsistent;
    }
    if (args.count) {
        if (outcome.completion_count)
            std::cout << *outcome.completion_count << '\n';
        else
            std::cout << "infinite\n";
        return 0;
    }
    if (args.all) {
        csum::CompletionEnumerator en(a, b, flavor);
        while (auto c = en.next())
            std::cout << csum::io::print_flat(*c);
        return 0;
    }
    std::cout << csum::io::print(*outcome.witness);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete tomography for the collapsing sum"};
    app.require_subcommand(1);

    std::string file;
    bool balanced = false;

    auto* collapse = app.add_subcommand("collapse", "print the collapsing sum of a matrix");
    collapse->add_option("file", file)->required();
    collapse->add_flag("--balanced", balanced, "use the balanced (signed) collapsing sum");

    auto* preimage = app.add_subcommand("preimage", "print a preimage of a matrix");
    preimage->add_option("file", file)->required();
    preimage->add_flag("--balanced", balanced);

    auto* canonical =
        app.add_subcommand("canonical", "print the zero-first-row-and-column representative");
    canonical->add_option("file", file)->required();

    auto* monge = app.add_subcommand("monge", "classify a matrix as monge / anti-monge / both / neither");
    monge->add_option("file", file)->required();

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "test consistency of a partial matrix with a target");
    check->add_option("file", check_args.matrix_path)->required();
    check->add_option("--target", check_args.target_path)->required();
    check->add_flag("--balanced", check_args.balanced);

    CompleteArgs complete_args;
    auto* complete = app.add_subcommand("complete", "complete a partial matrix to a preimage of a target");
    complete->add_option("file", complete_args.matrix_path)->required();
    complete->add_option("--target", complete_args.target_path)->required();
    complete->add_flag("--balanced", complete_args.balanced);
    complete->add_flag("--count", complete_args.count, "print the exact completion count");
    complete->add_flag("--all", complete_args.all, "stream every completion, one per line");
    complete->add_flag("--verbose", complete_args.verbose, "diagnostics on stderr");
    auto* excl = complete->get_option("--count");
    excl->excludes(complete->get_option("--all"));

    try {
        app.parse(argc, argv);

        if (collapse->parsed()) {
            auto a = csum::io::parse_dense(read_file(file));
            std::cout << csum::io::print(csum::collapse(a, flavor_of(balanced)));
            return 0;
        }
        if (preimage->parsed()) {
            auto b = csum::io::parse_dense(read_file(file));
            std::cout << csum::io::print(csum::preimage_of(b, flavor_of(balanced)));
            return 0;
        }
        if (canonical->parsed()) {
            auto a = csum::io::parse_dense(read_file(file));
            std::cout << csum::io::print(csum::canonicalize(a));
            return 0;
        }
        if (monge->parsed()) {
            auto a = csum::io::parse_dense(read_file(file));
            std::cout << csum::to_string(csum::monge_class(a)) << '\n';
            return 0;
        }
        if (check->parsed())
            return run_check(check_args);
        if (complete->parsed())
            return run_complete(complete_args);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) // --help
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    } catch (const csum::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const csum::unsupported_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const csum::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const csum::budget_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const csum::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
