// Copyright 2026 The QPIE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qpie/errors.hpp"
#include "qpie/pipeline.hpp"

namespace {

struct Options {
    std::string transform = "haar";
    std::string variant = "full";
    std::string scan = "both";
    std::string mapping;
    bool ascii = false;
};

void add_common_outputs(CLI::App* sub, qpie::PipelineConfig& cfg, Options& opt) {
    sub->add_option("-o,--output", cfg.output_image, "Output PGM image");
    sub->add_option("--amplitudes", cfg.amplitudes_csv, "Amplitude CSV dump");
    sub->add_option("--report", cfg.report_json, "JSON report path (default: stdout)");
    sub->add_option("--render", opt.mapping, "Pixel mapping: auto, signed or raw")
        ->check(CLI::IsMember({"auto", "signed", "raw"}));
    sub->add_flag("--ascii", opt.ascii, "Write P2 instead of P5");
    sub->add_flag("--timing", cfg.timing, "Add wall time to the report");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum probability image encoding: transforms, edge detection, "
                 "filtering and symmetry on a state-vector simulator"};
    app.require_subcommand(1);

    qpie::PipelineConfig cfg;
    Options opt;

    auto* enc = app.add_subcommand("encode", "Encode an image and dump its amplitudes");
    enc->add_option("input", cfg.inputs, "PGM image")->required()->expected(1);
    enc->add_flag("--no-rescale{false}", cfg.rescale, "Keep decoded values in amplitude units");
    add_common_outputs(enc, cfg, opt);

    auto* tr = app.add_subcommand("transform", "2D Hadamard, Fourier or Haar transform");
    tr->add_option("input", cfg.inputs, "PGM image")->required()->expected(1);
    tr->add_option("-k,--kind", opt.transform, "hadamard, fourier or haar")
        ->check(CLI::IsMember({"hadamard", "fourier", "qft", "haar"}));
    tr->add_flag("--no-rescale{false}", cfg.rescale, "Keep decoded values in amplitude units");
    add_common_outputs(tr, cfg, opt);

    auto* ed = app.add_subcommand("edge", "Quantum Hadamard edge detection");
    ed->add_option("input", cfg.inputs, "PGM image")->required()->expected(1);
    ed->add_option("--variant", opt.variant, "even, odd, full or ancilla")
        ->check(CLI::IsMember({"even", "odd", "full", "ancilla"}));
    ed->add_option("--scan", opt.scan, "column, row or both")
        ->check(CLI::IsMember({"column", "row", "both"}));
    ed->add_option("-t,--threshold", cfg.threshold, "Binary map threshold; 0 disables")
        ->check(CLI::NonNegativeNumber);
    add_common_outputs(ed, cfg, opt);

    auto* fi = app.add_subcommand("filter", "Apply a 3x3 mask through the filter operator");
    fi->add_option("input", cfg.inputs, "Square power-of-two PGM image")->required()->expected(1);
    fi->add_option("-m,--mask", cfg.mask_path, "Mask file: 3 lines of 3 reals")->required();
    add_common_outputs(fi, cfg, opt);

    auto* sy = app.add_subcommand("symmetry", "Inversion symmetry via overlap and SWAP test");
    sy->add_option("input", cfg.inputs, "PGM image")->required()->expected(1);
    sy->add_option("--shots", cfg.shots, "SWAP-test shots")->check(CLI::PositiveNumber);
    sy->add_option("--seed", cfg.seed, "PRNG seed");
    sy->add_option("--threshold", cfg.symmetry_threshold, "Verdict threshold on |overlap|")
        ->check(CLI::Range(0.0, 1.0));
    sy->add_flag("--no-rescale{false}", cfg.rescale, "Keep decoded values in amplitude units");
    add_common_outputs(sy, cfg, opt);

    auto* cmp = app.add_subcommand("compare", "Distance and fidelity between two images");
    cmp->add_option("inputs", cfg.inputs, "Candidate and reference PGM images")
        ->required()
        ->expected(2);
    cmp->add_option("--report", cfg.report_json, "JSON report path (default: stdout)");

    auto* gen = app.add_subcommand("generate", "Write a test pattern");
    gen->add_option("pattern", cfg.pattern, "chessboard, edge-test, two-region or ramp")
        ->required()
        ->check(CLI::IsMember({"chessboard", "edge-test", "two-region", "ramp"}));
    gen->add_option("--size", cfg.size, "Side length")->check(CLI::PositiveNumber);
    add_common_outputs(gen, cfg, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : qpie::exit_code_for(qpie::ErrorCategory::Input);
    }

    try {
        if (enc->parsed()) cfg.command = qpie::Command::Encode;
        if (tr->parsed()) cfg.command = qpie::Command::Transform;
        if (ed->parsed()) cfg.command = qpie::Command::Edge;
        if (fi->parsed()) cfg.command = qpie::Command::Filter;
        if (sy->parsed()) cfg.command = qpie::Command::Symmetry;
        if (cmp->parsed()) cfg.command = qpie::Command::Compare;
        if (gen->parsed()) cfg.command = qpie::Command::Generate;
        cfg.transform = qpie::parse_transform_kind(opt.transform);
        cfg.edge_variant = qpie::parse_edge_variant(opt.variant);
        cfg.edge_scan = qpie::parse_edge_scan(opt.scan);
        if (!opt.mapping.empty()) {
            cfg.mapping = qpie::parse_pixel_mapping(opt.mapping);
        }
        cfg.encoding = opt.ascii ? qpie::PgmEncoding::Ascii : qpie::PgmEncoding::Binary;
    } catch (const qpie::Error& e) {
        std::cerr << "qpie: error[" << qpie::to_string(e.category()) << '/'
                  << qpie::to_string(e.code()) << "]: " << e.what() << '\n';
        return qpie::exit_code_for(e.category());
    }
    return qpie::run(cfg, std::cout, std::cerr);
}
