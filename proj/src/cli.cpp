// Copyright 2026 The mdqft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mdqft/cli.hpp"

#include <cmath>
#include <filesystem>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "mdqft/errors.hpp"
#include "mdqft/experiment.hpp"
#include "mdqft/io.hpp"
#include "mdqft/oracle.hpp"
#include "mdqft/qft.hpp"
#include "mdqft/simulator.hpp"

namespace mdq::cli {

namespace {

/// Runs `body`, translating library exceptions into exit codes.
template <typename F>
int guarded(std::ostream &err, F &&body) {
    try {
        return body();
    } catch (const DegenerateInputError &e) {
        err << "error: " << e.what() << '\n';
        return kDegenerateInput;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::length_error &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kConsistencyFailure;
    }
}

void print_comparison(std::ostream &out, const std::string &label, const SpectrumComparison &c) {
    out << fmt::format("{:<22} max_abs_err={:.3e} max_rel_err={:.3e} {}", label, c.max_abs_err, c.max_rel_err,
                       c.pass ? "PASS" : "FAIL");
    if (c.first_failure) {
        out << fmt::format(" (first failure at flat index {})", *c.first_failure);
    }
    out << '\n';
}

} // namespace

int cmd_transform(const TransformOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const MdArray input = io::read_array_file(opts.input);
        const RunOptions run{opts.no_swap};
        const MdArray result = opts.inverse ? inverse_transform(input, opts.convention, run)
                                            : transform(input, opts.convention, run);
        io::write_array_file(opts.output, result);
        out << fmt::format("{} transform of {} ({} scale) written to {}\n", opts.inverse ? "inverse" : "forward",
                           input.layout().to_string(), to_string(opts.convention), opts.output);
        return kOk;
    });
}

int cmd_sample(const SampleOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        if (opts.shots == 0) {
            throw ValidationError("shot count must be >= 1");
        }
        const MdArray input = io::read_array_file(opts.input);
        const MdqftRun run = run_mdqft(input, RunOptions{opts.no_swap});
        const SampleHistogram hist = to_logical_order(run.plan, sample(run.state, opts.shots, opts.seed));
        io::write_text_file(opts.output, io::format_histogram(hist, input.layout(), false));
        out << fmt::format("{} shots (seed {}) over {} outcomes written to {}\n", opts.shots, opts.seed,
                           hist.counts.size(), opts.output);
        return kOk;
    });
}

int cmd_verify(const VerifyOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const MdArray input = io::read_array_file(opts.input);
        const MdArray quantum = transform(input, ScaleConvention::Classical);
        const MdArray naive = md_dft(input, DftEngine::Naive);
        const MdArray fft = md_dft(input, DftEngine::Fft);

        std::vector<std::pair<std::string, SpectrumComparison>> checks{
            {"simulator vs naive", compare_spectra(quantum, naive, opts.abs_tol, opts.rel_tol)},
            {"simulator vs fft", compare_spectra(quantum, fft, opts.abs_tol, opts.rel_tol)},
            {"fft vs naive", compare_spectra(fft, naive, opts.abs_tol, opts.rel_tol)},
        };
        if (opts.expected) {
            const MdArray expected = io::read_array_file(*opts.expected);
            checks.emplace_back("simulator vs expected",
                                compare_spectra(quantum, expected, opts.abs_tol, opts.rel_tol));
        }
        bool pass = true;
        for (const auto &[label, c] : checks) {
            print_comparison(out, label, c);
            pass = pass && c.pass;
        }
        out << (pass ? "verify: PASS\n" : "verify: FAIL\n");
        return pass ? kOk : kConsistencyFailure;
    });
}

int cmd_export(const ExportOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const ArrayLayout layout(io::parse_dims(opts.dims));
        const QftPlan plan = opts.no_swap ? mdqft_no_swap(layout) : mdqft(layout);
        io::write_text_file(opts.output, export_qasm(plan.circuit));
        out << fmt::format("{} gates on {} qubits written to {}\n", plan.circuit.size(), plan.num_qubits(),
                           opts.output);
        return kOk;
    });
}

int cmd_figure2(const Figure2Options &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        if (opts.shots == 0) {
            throw ValidationError("shot count must be >= 1");
        }
        namespace fs = std::filesystem;
        const experiment::Figure2Report rep = experiment::run_figure2(opts.shots, opts.seed);
        const fs::path dir(opts.output_dir);
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) {
            throw ParseError("cannot create " + dir.string() + ": " + ec.message());
        }
        const ArrayLayout &layout = rep.image.layout();

        std::string image = "x,y,value\n";
        std::string spectrum = "kx,ky,ideal_probability,classical_re,classical_im,classical_abs\n";
        for (std::size_t m = 0; m < layout.total_elements(); ++m) {
            const auto k = unflatten(m, layout);
            const auto v = rep.image.data()(static_cast<Eigen::Index>(m));
            const auto s = rep.classical_spectrum.data()(static_cast<Eigen::Index>(m));
            image += fmt::format("{},{},{}\n", k[0], k[1], v.real() + 0.0);
            // spectrum entries below 1e-12 are printed as 0 so the file is stable across libms
            auto clean = [](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; };
            spectrum += fmt::format("{},{},{},{},{},{}\n", k[0], k[1], clean(rep.ideal_probabilities[m]),
                                    clean(s.real()), clean(s.imag()), clean(std::abs(s)));
        }
        io::write_text_file(dir / "image.csv", image);
        io::write_text_file(dir / "spectrum.csv", spectrum);
        io::write_text_file(dir / "histogram.csv", io::format_histogram(rep.histogram, layout, true));
        io::write_text_file(dir / "init_circuit.qasm", export_qasm(rep.init_circuit));
        io::write_text_file(dir / "mdqft_no_swap.qasm", export_qasm(rep.plan.circuit));

        const auto &c = rep.peak_check;
        std::string report;
        report += fmt::format("shots: {}\nseed: {}\nlayout: {}\n", rep.shots, rep.seed, layout.to_string());
        report += "peaks (kx,ky): (2,2) (6,2) (2,6) (6,6)\n";
        report += fmt::format("ideal_max_peak_error: {:.3e}\nideal_max_offpeak_probability: {:.3e}\n",
                              c.max_peak_error, c.max_offpeak_prob);
        report += fmt::format("sampled_min_peak_frequency: {}\nsampled_max_peak_frequency: {}\n", c.min_peak_freq,
                              c.max_peak_freq);
        report += fmt::format("sampled_max_offpeak_frequency: {}\nsampled_offpeak_counts: {}\n",
                              c.max_offpeak_freq, c.offpeak_counts);
        report += fmt::format("peaks_within_0.25+-{}: {}\n", experiment::kPeakBand, c.within_band);
        report += fmt::format("classical_max_abs_err: {:.3e}\n", c.classical_max_err);
        report += fmt::format("verdict: {}\n", c.pass() ? "PASS" : "FAIL");
        io::write_text_file(dir / "report.txt", report);

        out << report;
        return c.pass() ? kOk : kConsistencyFailure;
    });
}

std::vector<ArrayLayout> sweep_layouts(int log2m) {
    std::vector<ArrayLayout> out;
    for (int d = 1; d <= 4; ++d) {
        if (log2m % d == 0) {
            out.emplace_back(std::vector<std::size_t>(static_cast<std::size_t>(d), std::size_t{1} << (log2m / d)));
        }
    }
    return out;
}

int report_gate_counts(const std::vector<ArrayLayout> &layouts, const GateCounter &actual, std::ostream &out) {
    out << fmt::format("{:<18} {:>2} {:>4} {:>4} {:>5} {:>6} {:>10} {:>6} {:>10} {:>12}\n", "dims", "d", "H", "CP",
                       "Swap", "total", "predicted", "match", "M", "M*log2(M)");
    bool all_match = true;
    for (const ArrayLayout &layout : layouts) {
        const GateCounts predicted = predicted_gate_count(layout);
        const GateCounts got = actual(layout);
        const bool match = predicted == got;
        all_match = all_match && match;
        const std::size_t m = layout.total_elements();
        const auto classical = m * static_cast<std::size_t>(layout.total_qubits());
        out << fmt::format("{:<18} {:>2} {:>4} {:>4} {:>5} {:>6} {:>10} {:>6} {:>10} {:>12}\n", layout.to_string(),
                           layout.rank(), got.h, got.controlled_phase, got.swap, got.total(), predicted.total(),
                           match ? "yes" : "NO", m, classical);
    }
    return all_match ? kOk : kConsistencyFailure;
}

int cmd_gatecount(const GatecountOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        std::vector<ArrayLayout> layouts;
        for (const std::string &dims : opts.layouts) {
            layouts.emplace_back(io::parse_dims(dims));
        }
        if (opts.sweep_log2m > 0) {
            for (ArrayLayout &l : sweep_layouts(opts.sweep_log2m)) {
                layouts.push_back(std::move(l));
            }
        }
        if (layouts.empty()) {
            throw ValidationError("gatecount needs at least one layout or --sweep");
        }
        return report_gate_counts(
            layouts, [](const ArrayLayout &l) { return gate_count(mdqft(l).circuit); }, out);
    });
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Multidimensional QFT simulator with a classical DFT oracle", "mdqft"};
    app.require_subcommand(1);

    TransformOptions t;
    std::string convention = "classical";
    auto *transform_cmd = app.add_subcommand("transform", "Transform an array file through the QFT circuit");
    transform_cmd->add_option("input", t.input, "Input array file")->required();
    transform_cmd->add_option("output", t.output, "Output array file")->required();
    transform_cmd->add_flag("--no-swap", t.no_swap, "Elide terminal swaps, reorder outcomes classically");
    transform_cmd->add_option("--convention", convention, "raw | classical | unitary")->capture_default_str();
    transform_cmd->add_flag("--inverse", t.inverse, "Apply the inverse transform (adjoint circuit)");

    SampleOptions s;
    auto *sample_cmd = app.add_subcommand("sample", "Sample measurement outcomes of the transformed state");
    sample_cmd->add_option("input", s.input, "Input array file")->required();
    sample_cmd->add_option("-o,--output", s.output, "Histogram CSV")->required();
    sample_cmd->add_option("--shots", s.shots, "Number of shots")->capture_default_str();
    sample_cmd->add_option("--seed", s.seed, "RNG seed")->capture_default_str();
    sample_cmd->add_flag("--no-swap", s.no_swap, "Elide terminal swaps");

    VerifyOptions v;
    std::string expected;
    auto *verify_cmd = app.add_subcommand("verify", "Compare simulator, naive DFT and FFT spectra");
    verify_cmd->add_option("input", v.input, "Input array file")->required();
    verify_cmd->add_option("--expected", expected, "Expected spectrum (classical scale)");
    verify_cmd->add_option("--abs-tol", v.abs_tol)->capture_default_str();
    verify_cmd->add_option("--rel-tol", v.rel_tol)->capture_default_str();

    ExportOptions e;
    auto *export_cmd = app.add_subcommand("export", "Write the QFT circuit as OpenQASM 2.0");
    export_cmd->add_option("--dims", e.dims, "Comma-separated extents, e.g. 8,8")->required();
    export_cmd->add_flag("--no-swap", e.no_swap, "Elide terminal swaps");
    export_cmd->add_option("-o,--output", e.output, "Output .qasm file")->required();

    Figure2Options f;
    auto *fig_cmd = app.add_subcommand("figure2", "Reproduce the 8x8 2D-QFT example without noise");
    fig_cmd->add_option("--shots", f.shots)->capture_default_str();
    fig_cmd->add_option("--seed", f.seed)->capture_default_str();
    fig_cmd->add_option("--out-dir", f.output_dir)->capture_default_str();

    GatecountOptions g;
    auto *gc_cmd = app.add_subcommand("gatecount", "Predicted vs actual gate counts");
    gc_cmd->add_option("dims", g.layouts, "Layouts, e.g. 8,8 4,4,4");
    gc_cmd->add_option("--sweep", g.sweep_log2m, "Equal-extent sweep over d = 1..4 at M = 2^N");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &pe) {
        err << "error: " << pe.what() << '\n';
        return kInputError;
    }

    if (*transform_cmd) {
        const int rc = guarded(err, [&] {
            t.convention = parse_convention(convention);
            return kOk;
        });
        return rc != kOk ? rc : cmd_transform(t, out, err);
    }
    if (*sample_cmd) return cmd_sample(s, out, err);
    if (*verify_cmd) {
        if (!expected.empty()) v.expected = expected;
        return cmd_verify(v, out, err);
    }
    if (*export_cmd) return cmd_export(e, out, err);
    if (*fig_cmd) return cmd_figure2(f, out, err);
    if (*gc_cmd) return cmd_gatecount(g, out, err);
    return kInputError;
}

} // namespace mdq::cli
