// Copyright 2026 The Ringtoss Authors
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

// Command-line driver: channel reports, simulation and rate measurement,
// cross-process encode/decode, product-channel scans, gaussian figure data
// and the self-test suite.
//
// Exit codes: 0 success, 2 input error, 3 statistical or bound regression.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringtoss/channel_io.hpp"
#include "ringtoss/codec.hpp"
#include "ringtoss/gauss.hpp"
#include "ringtoss/presets.hpp"
#include "ringtoss/product.hpp"
#include "ringtoss/sampler.hpp"
#include "ringtoss/stats.hpp"
#include "ringtoss/verify.hpp"
#include "ringtoss/width.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitRegression = 3;

std::uint64_t effective_seed(const std::optional<std::uint64_t>& given) {
    if (given) return *given;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

struct channel_args {
    std::string preset;
    std::string file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--preset", preset,
                        "named channel: bsc:<p>, bec:<eps>, identity:<k>, "
                        "uniform-additive:<k>:<w>");
        cmd->add_option("--channel", file, "channel spec file (JSON with px, pygx)");
    }
    ringtoss::joint_source load() const { return ringtoss::load_channel(preset, file); }
    std::string label() const { return preset.empty() ? file : preset; }
};

int cmd_info(const channel_args& ch, bool as_csv) {
    const auto j = ch.load();
    const double mi = ringtoss::mutual_information(j);
    const double fi = ringtoss::functional_information(j);
    const double ce = ringtoss::cross_entropy_oracle(j);
    const double naive = std::ceil(std::log2(j.bound_m())) + 1.0;
    const bool singular = ringtoss::detect_singular(j).is_singular;
    if (as_csv) {
        std::printf("channel,mi,i_f,cross_entropy,coding_gap,naive_geometric_length,singular\n");
        std::printf("%s,%.12g,%.12g,%.12g,%.12g,%.12g,%d\n", ch.label().c_str(), mi, fi, ce,
                    ce - fi, naive, singular ? 1 : 0);
    } else {
        std::printf("channel: %s  (|X|=%zu, |Y|=%zu, M=%.6g)\n", ch.label().c_str(), j.nx(),
                    j.ny(), j.bound_m());
        std::printf("mutual information:          %.12g bits\n", mi);
        std::printf("functional information:      %.12g bits\n", fi);
        std::printf("index cross-entropy:         %.12g bits\n", ce);
        std::printf("coding gap (<= log2 e):      %.12g bits\n", ce - fi);
        std::printf("naive geometric length:      %.12g bits\n", naive);
        std::printf("singular:                    %s\n", singular ? "yes" : "no");
    }
    return kExitOk;
}

int cmd_simulate(const channel_args& ch, std::size_t x, std::uint64_t trials,
                 const std::optional<std::uint64_t>& seed_opt) {
    const auto j = ch.load();
    if (x >= j.nx() || j.px()(x) == 0.0) {
        throw ringtoss::error("input symbol " + std::to_string(x) + " has zero probability");
    }
    const std::uint64_t seed = effective_seed(seed_opt);
    std::printf("seed: %" PRIu64 "\n", seed);

    const auto batch = ringtoss::simulate_batch(j, x, trials, seed);
    const auto gof = ringtoss::chi_square_gof(batch.y_counts, j.conditional(x).pmf());
    const auto rate = ringtoss::measure_rate(j, trials, seed ^ 0x5151515151515151ull);
    const double oracle = ringtoss::cross_entropy_oracle(j);

    std::printf("trials: %" PRIu64 "  (x = %zu)\n", trials, x);
    std::printf("mean index K:                %.6g  (M = %.6g)\n", batch.k_stats.mean(),
                j.bound_m());
    std::printf("chi-square p-value:          %.6g\n", gof.p_value);
    std::printf("mean code length:            %.6g bits (+/- %.2g)\n", rate.mean_length,
                rate.mean_length_stderr);
    std::printf("cross-entropy estimate:      %.6g bits (closed form %.6g)\n",
                rate.cross_entropy_estimate, oracle);
    std::printf("functional information:      %.6g bits\n", rate.i_f);
    std::printf("mutual information:          %.6g bits\n", rate.mi);
    std::printf("rate bound satisfied:        %s\n", rate.bound_ok ? "yes" : "no");
    if (gof.p_value <= 1e-3 || !rate.bound_ok) {
        std::fprintf(stderr, "regression: %s\n",
                     gof.p_value <= 1e-3 ? "goodness-of-fit failed" : "rate bound exceeded");
        return kExitRegression;
    }
    return kExitOk;
}

int cmd_encode(const channel_args& ch, std::size_t x, const std::optional<std::uint64_t>& seed_opt,
               const std::string& out_path) {
    const auto j = ch.load();
    if (x >= j.nx() || j.px()(x) == 0.0) {
        throw ringtoss::error("input symbol " + std::to_string(x) + " has zero probability");
    }
    const std::uint64_t seed = effective_seed(seed_opt);
    std::printf("seed: %" PRIu64 "\n", seed);
    const ringtoss::common_randomness z(seed, j);
    const ringtoss::width_table table(j);
    const auto enc = ringtoss::encode_detail(x, z, j, table, ringtoss::default_k_max(j));
    std::printf("k: %zu\n", enc.k);
    std::printf("y: %zu\n", enc.y);
    std::printf("bits: %s\n", enc.bits.to_string().c_str());
    std::printf("length: %zu\n", enc.bits.size());
    if (!out_path.empty()) {
        const auto frame = enc.bits.to_frame();
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw ringtoss::error("cannot write codeword file '" + out_path + "'");
        out.write(reinterpret_cast<const char*>(frame.data()),
                  static_cast<std::streamsize>(frame.size()));
        std::printf("wrote %zu bytes to %s\n", frame.size(), out_path.c_str());
    }
    return kExitOk;
}

int cmd_decode(const channel_args& ch, std::uint64_t seed, const std::string& in_path,
               const std::string& bits_arg) {
    const auto j = ch.load();
    ringtoss::bitstring bits;
    if (!in_path.empty()) {
        std::ifstream in(in_path, std::ios::binary);
        if (!in) throw ringtoss::error("cannot open codeword file '" + in_path + "'");
        std::vector<std::uint8_t> frame((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
        bits = ringtoss::bitstring::from_frame(frame);
    } else if (!bits_arg.empty()) {
        for (char b : bits_arg) {
            if (b != '0' && b != '1') throw ringtoss::error("--bits must be a 0/1 string");
            bits.push_back(b == '1');
        }
    } else {
        throw ringtoss::error("decode needs --in or --bits");
    }
    const ringtoss::common_randomness z(seed, j);
    const auto dec = ringtoss::decode(bits, z, j);
    std::printf("seed: %" PRIu64 "\n", seed);
    std::printf("k: %zu\n", dec.k);
    std::printf("y: %zu\n", dec.y);
    return kExitOk;
}

int cmd_scaling(const channel_args& ch, const std::vector<std::size_t>& n_list,
                const std::string& out_path) {
    const auto j = ch.load();
    const auto curve = ringtoss::redundancy_curve(j, n_list);
    std::FILE* out = stdout;
    if (!out_path.empty()) {
        out = std::fopen(out_path.c_str(), "w");
        if (!out) throw ringtoss::error("cannot write '" + out_path + "'");
    }
    std::fprintf(out, "n,i_f,n_i,redundancy,normalized\n");
    for (const auto& pt : curve) {
        std::fprintf(out, "%zu,%.12g,%.12g,%.12g,%.12g\n", pt.n, pt.i_f_n, pt.n_i, pt.redundancy,
                     pt.normalized);
    }
    if (out != stdout) std::fclose(out);
    return kExitOk;
}

int cmd_gauss(double mean, double var, double trunc, int grid_points, double x,
              const std::optional<std::uint64_t>& seed_opt, const std::string& out_dir) {
    const std::uint64_t seed = effective_seed(seed_opt);
    std::printf("seed: %" PRIu64 "\n", seed);

    // Width-function grid for the narrow-vs-standard pair.
    const ringtoss::gauss1d p{mean, var, {}};
    const ringtoss::gauss1d q{0.0, 1.0, {}};
    const auto w = ringtoss::gaussian_width(p, q);
    const std::string f1 = out_dir + "/figure1.csv";
    {
        std::FILE* out = std::fopen(f1.c_str(), "w");
        if (!out) throw ringtoss::error("cannot write '" + f1 + "'");
        std::fprintf(out, "level,width\n");
        for (int i = 0; i <= grid_points; ++i) {
            const double level = w.max_level() * i / grid_points;
            std::fprintf(out, "%.12g,%.12g\n", level, w(level));
        }
        std::fclose(out);
    }
    std::printf("width function: %d grid points, max level %.6g, csd %.6g bits -> %s\n",
                grid_points + 1, w.max_level(), ringtoss::gaussian_csd(p, q), f1.c_str());

    // Rejection trace on the truncated additive-noise channel.
    ringtoss::awgn_channel ch;
    ch.bound = trunc;
    const auto demo = ringtoss::awgn_demo(ch, x, seed, 1u << 24);
    const std::string f2 = out_dir + "/figure2_trace.csv";
    {
        std::FILE* out = std::fopen(f2.c_str(), "w");
        if (!out) throw ringtoss::error("cannot write '" + f2 + "'");
        std::fprintf(out, "i,y,level,accept\n");
        for (const auto& st : demo.trace) {
            std::fprintf(out, "%zu,%.12g,%.12g,%d\n", st.i, st.y, st.level, st.accept ? 1 : 0);
        }
        std::fclose(out);
    }
    std::printf("rejection trace: x=%.6g, B=%.6g, accepted y=%.6g at k=%zu -> %s\n", x, trunc,
                demo.y, demo.k, f2.c_str());
    return kExitOk;
}

int cmd_verify(const std::string& level) {
    if (level != "quick" && level != "full") {
        throw ringtoss::error("--level must be quick or full");
    }
    const std::string first_fail = ringtoss::verify::run_checks(level == "quick", std::cout);
    if (!first_fail.empty()) {
        std::fprintf(stderr, "verification failed: %s\n", first_fail.c_str());
        return kExitRegression;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-shot channel simulation toolkit"};
    app.require_subcommand(1);

    channel_args info_ch, sim_ch, enc_ch, dec_ch, scale_ch;
    bool info_csv = false;
    std::size_t sim_x = 0, enc_x = 0;
    std::uint64_t sim_trials = 100000;
    std::optional<std::uint64_t> sim_seed, enc_seed, gauss_seed;
    std::uint64_t dec_seed = 0;
    std::string enc_out, dec_in, dec_bits, scale_out, gauss_dir = ".";
    std::vector<std::size_t> n_list{1, 2, 4, 8, 16, 64, 256, 1024, 4096, 16384};
    double g_mean = 0.3, g_var = 0.25, g_trunc = 4.0, g_x = -0.5;
    int g_grid = 512;
    std::string verify_level = "quick";

    auto* info = app.add_subcommand("info", "information measures of a channel");
    info_ch.attach(info);
    info->add_flag("--csv", info_csv, "emit one CSV row instead of text");

    auto* sim = app.add_subcommand("simulate", "simulate the channel and measure the rate");
    sim_ch.attach(sim);
    sim->add_option("--x", sim_x, "input symbol")->required();
    sim->add_option("--trials", sim_trials, "number of trials")
        ->check(CLI::Range(std::uint64_t{100}, std::uint64_t{100000000}));
    sim->add_option("--seed", sim_seed, "seed (default: system entropy)");

    auto* enc = app.add_subcommand("encode", "encode one sample for an input symbol");
    enc_ch.attach(enc);
    enc->add_option("--x", enc_x, "input symbol")->required();
    enc->add_option("--seed", enc_seed, "shared-randomness seed");
    enc->add_option("--out", enc_out, "write the framed codeword here");

    auto* dec = app.add_subcommand("decode", "decode a codeword back to (k, y)");
    dec_ch.attach(dec);
    dec->add_option("--seed", dec_seed, "shared-randomness seed")->required();
    dec->add_option("--in", dec_in, "framed codeword file");
    dec->add_option("--bits", dec_bits, "codeword as a 0/1 string");

    auto* scale = app.add_subcommand("scaling", "redundancy curve of the n-fold product");
    scale_ch.attach(scale);
    scale->add_option("--n-list", n_list, "block lengths")->delimiter(',');
    scale->add_option("--out", scale_out, "CSV output file (default stdout)");

    auto* gauss = app.add_subcommand("gauss", "gaussian width function and rejection trace");
    gauss->add_option("--mean", g_mean, "mean of the narrow distribution");
    gauss->add_option("--var", g_var, "variance of the narrow distribution");
    gauss->add_option("--trunc", g_trunc, "symmetric truncation bound for the trace");
    gauss->add_option("--grid-points", g_grid, "width grid resolution")
        ->check(CLI::Range(8, 1 << 20));
    gauss->add_option("--x", g_x, "channel input for the trace");
    gauss->add_option("--seed", gauss_seed, "seed (default: system entropy)");
    gauss->add_option("--out-dir", gauss_dir, "directory for the CSV files");

    auto* ver = app.add_subcommand("verify", "run the self-test suite");
    ver->add_option("--level", verify_level, "quick or full");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (info->parsed()) return cmd_info(info_ch, info_csv);
        if (sim->parsed()) return cmd_simulate(sim_ch, sim_x, sim_trials, sim_seed);
        if (enc->parsed()) return cmd_encode(enc_ch, enc_x, enc_seed, enc_out);
        if (dec->parsed()) return cmd_decode(dec_ch, dec_seed, dec_in, dec_bits);
        if (scale->parsed()) return cmd_scaling(scale_ch, n_list, scale_out);
        if (gauss->parsed()) {
            return cmd_gauss(g_mean, g_var, g_trunc, g_grid, g_x, gauss_seed, gauss_dir);
        }
        if (ver->parsed()) return cmd_verify(verify_level);
    } catch (const ringtoss::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInput;
    }
    return kExitOk;
}
