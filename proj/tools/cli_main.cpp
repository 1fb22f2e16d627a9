#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cubiclinks/formats.hpp"

namespace {

using namespace cubiclinks;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

struct Request {
    std::string command;
    std::string type_string;
    std::string format = "md";
};

int run(const Request& req) {
    OutputFormat fmt = parse_format(req.format);
    try {
        if (req.command == "lines") {
            std::cout << render_lines(fmt);
            return kExitOk;
        }
        SurfaceClass c;
        if (!req.type_string.empty()) {
            try {
                c = parse_surface_class(req.type_string);
            } catch (const ParseError& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitParse;
            }
        }
        if (req.command == "secancy") std::cout << render_secancy(c, fmt);
        else if (req.command == "normalize") std::cout << render_normalize(c, fmt);
        else if (req.command == "h0") std::cout << render_h0(c, fmt);
        else if (req.command == "cubics") std::cout << render_cubics(c, fmt);
        else if (req.command == "classify") std::cout << render_classify(c, fmt);
        else if (req.command == "enumerate") std::cout << render_enumerate(fmt);
        else if (req.command == "analyze") std::cout << render_analyze(c, fmt);
        else if (req.command == "tables") std::cout << render_tables(fmt);
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Curve types on smooth cubic surfaces and their Sarkisov links"};
    app.require_subcommand(1);

    Request req;
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", req.format, "Output format")
            ->check(CLI::IsMember({"md", "csv", "json"}))
            ->capture_default_str();
    };
    auto add_type = [&](CLI::App* cmd) {
        cmd->add_option("type", req.type_string, "Curve type \"(k;m1,m2,m3,m4,m5,m6)\"")
            ->required();
    };

    for (const char* name : {"lines", "enumerate", "tables"}) {
        auto* cmd = app.add_subcommand(name);
        add_format(cmd);
        cmd->callback([&req, name] { req.command = name; });
    }
    for (const char* name : {"secancy", "normalize", "h0", "cubics", "classify", "analyze"}) {
        auto* cmd = app.add_subcommand(name);
        add_type(cmd);
        add_format(cmd);
        cmd->callback([&req, name] { req.command = name; });
    }

    app.get_subcommand("lines")->description("List the 27 lines with labels and classes");
    app.get_subcommand("secancy")->description("Intersection numbers with the 27 lines");
    app.get_subcommand("normalize")->description("Reduce a type to standard form");
    app.get_subcommand("h0")->description("Sections of a divisor class on the cubic");
    app.get_subcommand("cubics")->description("Dimension of the space of cubics through the curve");
    app.get_subcommand("classify")->description("Weak Fano / link candidate / excluded status");
    app.get_subcommand("enumerate")->description("All candidate curve types");
    app.get_subcommand("analyze")->description("Replay the Sarkisov link of a candidate type");
    app.get_subcommand("tables")->description("Summary tables for all candidates");

    CLI11_PARSE(app, argc, argv);

    try {
        return run(req);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
