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

#include "qpie/pipeline.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>

#include "qpie/errors.hpp"
#include "qpie/pgm.hpp"
#include "test_dir.hpp"

using namespace qpie;
using testing_support::ScratchDir;

namespace {

PipelineConfig make(Command c, std::vector<std::string> inputs) {
    PipelineConfig cfg;
    cfg.command = c;
    cfg.inputs = std::move(inputs);
    return cfg;
}

int shell(const std::string& cmd) {
    const int rc = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST(Pipeline, GeneratePatterns) {
    const ImageMatrix cb = generate_pattern("chessboard", 4);
    EXPECT_EQ(cb(0, 0), 255.0);
    EXPECT_EQ(cb(0, 1), 0.0);
    const ImageMatrix fe = generate_pattern("edge-test", 0);
    EXPECT_EQ(fe(0, 1), 255.0);
    EXPECT_EQ(fe(3, 3), 0.0);
    const ImageMatrix tr = generate_pattern("two-region", 64);
    EXPECT_EQ(tr(32, 32), 255.0);
    EXPECT_EQ(tr(0, 0), 0.0);
    EXPECT_THROW(generate_pattern("cat", 8), Error);
}

TEST(Pipeline, HaarTransformOfChessboardMatchesClassical) {
    ScratchDir dir("pipe");
    write_image(generate_pattern("chessboard", 4), dir.file("cb.pgm"), {PixelMapping::Raw});
    PipelineConfig cfg = make(Command::Transform, {dir.file("cb.pgm")});
    cfg.transform = TransformKind::Haar;
    cfg.output_image = dir.file("out.pgm");
    cfg.amplitudes_csv = dir.file("amps.csv");
    const auto report = execute(cfg);
    EXPECT_LE(report["result"]["max_abs_error_vs_classical"].get<double>(), 1e-10);
    EXPECT_EQ(report["result"]["circuit_steps"].get<int>(), 6);
    EXPECT_EQ(read_image(dir.file("out.pgm")).rows(), 4u);
    EXPECT_NE(read_file(dir.file("amps.csv")).find("index,basis,real,imag"), std::string::npos);
    EXPECT_FALSE(report.contains("wall_time_seconds"));
}

TEST(Pipeline, EdgeAncillaReportsProbability) {
    ScratchDir dir("pipe");
    write_image(generate_pattern("edge-test", 4), dir.file("fe.pgm"), {PixelMapping::Raw});
    PipelineConfig cfg = make(Command::Edge, {dir.file("fe.pgm")});
    cfg.edge_variant = EdgeMapVariant::Ancilla;
    cfg.edge_scan = EdgeScan::Column;
    cfg.output_image = dir.file("edges.pgm");
    cfg.timing = true;
    const auto report = execute(cfg);
    const auto& run = report["result"]["runs"][0];
    // sum over cyclic differences squared / (4 * sum of squares): 10 / (4 * 10)
    EXPECT_NEAR(run["success_probability"].get<double>(), 0.25, 1e-12);
    EXPECT_EQ(report["result"]["edge_pixels"].get<int>(), 7);
    EXPECT_TRUE(report.contains("wall_time_seconds"));
    // signed rendering: no-edge pixels sit at mid-grey
    EXPECT_EQ(read_image(dir.file("edges.pgm"))(3, 0), 128.0);
}

TEST(Pipeline, SymmetryVerdicts) {
    ScratchDir dir("pipe");
    write_image(generate_pattern("two-region", 16), dir.file("sym.pgm"), {PixelMapping::Raw});
    write_image(generate_pattern("ramp", 16), dir.file("ramp.pgm"), {PixelMapping::Raw});
    auto sym = execute(make(Command::Symmetry, {dir.file("sym.pgm")}));
    EXPECT_NEAR(sym["result"]["overlap"]["real"].get<double>(), 1.0, 1e-12);
    EXPECT_TRUE(sym["result"]["symmetric"].get<bool>());
    auto ramp = execute(make(Command::Symmetry, {dir.file("ramp.pgm")}));
    EXPECT_FALSE(ramp["result"]["symmetric"].get<bool>());
}

TEST(Pipeline, FilterAndCompare) {
    ScratchDir dir("pipe");
    write_image(generate_pattern("chessboard", 8), dir.file("cb.pgm"), {PixelMapping::Raw});
    write_file(dir.file("id.txt"), "0 0 0\n0 1 0\n0 0 0\n");
    PipelineConfig cfg = make(Command::Filter, {dir.file("cb.pgm")});
    cfg.mask_path = dir.file("id.txt");
    cfg.output_image = dir.file("f.pgm");
    cfg.mapping = PixelMapping::Raw;
    const auto report = execute(cfg);
    EXPECT_TRUE(report["result"]["unitary"].get<bool>());
    EXPECT_EQ(report["result"]["relative_change"].get<double>(), 0.0);
    const auto cmp = execute(make(Command::Compare, {dir.file("f.pgm"), dir.file("cb.pgm")}));
    EXPECT_EQ(cmp["result"]["relative_euclidean"].get<double>(), 0.0);
    EXPECT_NEAR(cmp["result"]["state_fidelity"].get<double>(), 1.0, 1e-12);
}

TEST(Pipeline, ErrorsMapToExitCodes) {
    ScratchDir dir("pipe");
    std::ostringstream out, err;
    EXPECT_EQ(run(make(Command::Encode, {dir.file("missing.pgm")}), out, err), 4);
    EXPECT_NE(err.str().find("error[io/IoFailure]"), std::string::npos);

    write_file(dir.file("zero.pgm"), "P2\n2 2\n255\n0 0 0 0\n");
    err.str("");
    EXPECT_EQ(run(make(Command::Encode, {dir.file("zero.pgm")}), out, err), 2);
    EXPECT_NE(err.str().find("error[input/ZeroImage]"), std::string::npos);

    write_file(dir.file("rect.pgm"), "P2\n8 4\n255\n1 1 1 1 1 1 1 1\n1 1 1 1 1 1 1 1\n"
                                     "1 1 1 1 1 1 1 1\n1 1 1 1 1 1 1 1\n");
    write_file(dir.file("id.txt"), "0 0 0\n0 1 0\n0 0 0\n");
    PipelineConfig cfg = make(Command::Filter, {dir.file("rect.pgm")});
    cfg.mask_path = dir.file("id.txt");
    err.str("");
    EXPECT_EQ(run(cfg, out, err), 3);
    EXPECT_NE(err.str().find("error[numeric/ShapeMismatch]"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    ScratchDir dir("cli");
    const std::string q = QPIE_CLI_PATH;
    EXPECT_EQ(shell(q + " generate chessboard --size 4 -o " + dir.file("cb.pgm")), 0);
    EXPECT_EQ(shell(q + " transform " + dir.file("cb.pgm") + " --kind fourier"), 0);
    EXPECT_EQ(shell(q + " transform " + dir.file("cb.pgm") + " --kind nope"), 2);
    EXPECT_EQ(shell(q + " edge " + dir.file("missing.pgm")), 4);
    EXPECT_EQ(shell(q + " nosuchcommand"), 2);
    write_file(dir.file("bad.pgm"), "P2\n2 2\n255\n1 2");
    EXPECT_EQ(shell(q + " encode " + dir.file("bad.pgm")), 2);
}
