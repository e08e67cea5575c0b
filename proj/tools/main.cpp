// Command-line front end. Links only the public C API.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "sfreecut/sfreecut.h"

namespace {

struct InstanceDeleter {
    void operator()(sfc_instance* p) const { sfc_instance_free(p); }
};
struct BodyDeleter {
    void operator()(sfc_body* p) const { sfc_body_free(p); }
};
using InstancePtr = std::unique_ptr<sfc_instance, InstanceDeleter>;
using BodyPtr = std::unique_ptr<sfc_body, BodyDeleter>;

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { sfc_string_free(s); }
};

int fail(const std::string& context) {
    std::cerr << "error: " << context << ": " << sfc_last_error() << "\n";
    return 2;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return bool(out);
}

int load_instance(const std::string& path, InstancePtr& out) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read " << path << "\n";
        return 2;
    }
    sfc_instance* raw = nullptr;
    if (sfc_instance_parse(text.c_str(), &raw) != SFC_OK) return fail(path);
    out.reset(raw);
    return 0;
}

int load_body(const std::string& path, BodyPtr& out) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read " << path << "\n";
        return 2;
    }
    sfc_body* raw = nullptr;
    if (sfc_body_parse(text.c_str(), &raw) != SFC_OK) return fail(path);
    out.reset(raw);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximal S-free convex sets and minimal cut functions, in exact arithmetic"};
    app.require_subcommand(1);

    std::string instance_path, body_path, box, out_path;
    std::vector<std::string> body_paths;
    bool want_trace = false;

    auto add_common = [&](CLI::App* cmd, bool needs_body, bool multi_body = false) {
        cmd->add_option("--instance", instance_path, "instance file (n, S, f, rays, box)")->required();
        if (multi_body)
            cmd->add_option("--body", body_paths, "body file(s)");
        else if (needs_body)
            cmd->add_option("--body", body_path, "body file")->required();
        cmd->add_option("--box", box, "box override: \"x1lo x1hi x2lo x2hi ...\"");
        cmd->add_option("--out", out_path, "output file");
        return cmd;
    };

    CLI::App* c_check = add_common(app.add_subcommand("check", "S-freeness and maximality report"), true);
    CLI::App* c_max = add_common(app.add_subcommand("maximalize", "tilt a body to a maximal S-free set"), true);
    c_max->add_flag("--trace", want_trace, "include the tilting trace in the report");
    CLI::App* c_cut = app.add_subcommand("cut", "generate minimal cut coefficients");
    c_cut->add_option("--instance", instance_path, "instance file")->required();
    c_cut->add_option("--body", body_path, "optional initial body file");
    c_cut->add_option("--box", box, "box override");
    c_cut->add_option("--out", out_path, "output file");
    CLI::App* c_verify = add_common(app.add_subcommand("verify", "brute-force validity audit of a gauge"), true);
    CLI::App* c_polar = app.add_subcommand("polar", "polar generators of a body's row cone");
    c_polar->add_option("--body", body_path, "body file")->required();
    c_polar->add_option("--out", out_path, "output file");
    CLI::App* c_tighten = add_common(app.add_subcommand("tighten", "companion lattice-free set"), true);
    CLI::App* c_plot = add_common(app.add_subcommand("plot", "deterministic SVG figure"), false, true);

    CLI11_PARSE(app, argc, argv);

    const char* box_arg = box.empty() ? nullptr : box.c_str();
    InstancePtr inst;
    BodyPtr body;

    auto emit = [&](const char* text) {
        std::cout << text;
        if (!out_path.empty() && !write_file(out_path, text)) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        return 0;
    };

    if (c_check->parsed()) {
        if (int rc = load_instance(instance_path, inst)) return rc;
        if (int rc = load_body(body_path, body)) return rc;
        OwnedString report;
        int negative = 0;
        if (sfc_check(body.get(), inst.get(), box_arg, &report.s, &negative) != SFC_OK)
            return fail("check");
        if (int rc = emit(report.s)) return rc;
        return negative ? 1 : 0;
    }
    if (c_max->parsed()) {
        if (int rc = load_instance(instance_path, inst)) return rc;
        if (int rc = load_body(body_path, body)) return rc;
        OwnedString body_text, report;
        int negative = 0;
        if (sfc_maximalize(body.get(), inst.get(), box_arg, want_trace ? 1 : 0, &body_text.s,
                           &report.s, &negative) != SFC_OK)
            return fail("maximalize");
        std::cout << report.s;
        if (!out_path.empty() && !write_file(out_path, body_text.s)) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        return negative ? 1 : 0;
    }
    if (c_cut->parsed()) {
        if (int rc = load_instance(instance_path, inst)) return rc;
        if (!body_path.empty())
            if (int rc = load_body(body_path, body)) return rc;
        OwnedString report;
        int negative = 0;
        if (sfc_cut(inst.get(), body.get(), box_arg, &report.s, &negative) != SFC_OK)
            return fail("cut");
        if (int rc = emit(report.s)) return rc;
        return negative ? 1 : 0;
    }
    if (c_verify->parsed()) {
        if (int rc = load_instance(instance_path, inst)) return rc;
        if (int rc = load_body(body_path, body)) return rc;
        OwnedString report;
        int negative = 0;
        if (sfc_verify(inst.get(), body.get(), box_arg, &report.s, &negative) != SFC_OK)
            return fail("verify");
        if (int rc = emit(report.s)) return rc;
        return negative ? 1 : 0;
    }
    if (c_polar->parsed()) {
        if (int rc = load_body(body_path, body)) return rc;
        OwnedString report;
        if (sfc_polar(body.get(), &report.s) != SFC_OK) return fail("polar");
        return emit(report.s);
    }
    if (c_tighten->parsed()) {
        if (int rc = load_instance(instance_path, inst)) return rc;
        if (int rc = load_body(body_path, body)) return rc;
        OwnedString report;
        int negative = 0;
        if (sfc_tighten(body.get(), inst.get(), box_arg, &report.s, &negative) != SFC_OK)
            return fail("tighten");
        if (int rc = emit(report.s)) return rc;
        return negative ? 1 : 0;
    }
    if (c_plot->parsed()) {
        if (int rc = load_instance(instance_path, inst)) return rc;
        std::vector<BodyPtr> bodies;
        std::vector<const sfc_body*> raw;
        for (const std::string& p : body_paths) {
            BodyPtr b;
            if (int rc = load_body(p, b)) return rc;
            raw.push_back(b.get());
            bodies.push_back(std::move(b));
        }
        OwnedString svg;
        if (sfc_plot(inst.get(), raw.data(), raw.size(), box_arg, &svg.s) != SFC_OK)
            return fail("plot");
        return emit(svg.s);
    }
    return 2;
}
