#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "handshape/annotate.hpp"
#include "handshape/config.hpp"
#include "handshape/evaluation.hpp"
#include "handshape/image_io.hpp"
#include "handshape/manifest.hpp"
#include "handshape/synth.hpp"
#include "handshape/tracking.hpp"

namespace fs = std::filesystem;
using namespace handshape;

namespace {

// One slot per shared flag; only flags the user actually passed are applied,
// so the precedence is flag > config file > default.
struct FlagValues {
    std::string config;
    std::string templates;
    std::string background;
    std::string accept_threshold;
    std::string binary_threshold;
    std::string scales;
    std::string out;
};

void add_common_options(CLI::App& cmd, FlagValues& flags) {
    cmd.add_option("--config", flags.config, "config file of 'key = value' lines");
    cmd.add_option("--templates", flags.templates, "template manifest path");
    cmd.add_option("--background", flags.background, "background image path, or 'first-frame'");
    cmd.add_option("--accept-threshold", flags.accept_threshold,
                   "minimum best score accepted as a hand");
    cmd.add_option("--binary-threshold", flags.binary_threshold,
                   "background-difference binarization threshold");
    cmd.add_option("--scales", flags.scales, "comma-separated search scales");
    cmd.add_option("--out", flags.out, "output directory (or file for classify)");
}

RunConfig build_config(const FlagValues& flags) {
    RunConfig cfg;
    if (!flags.config.empty()) parse_config_file(cfg, flags.config);
    if (!flags.templates.empty()) apply_key(cfg, "templates", flags.templates);
    if (!flags.background.empty()) apply_key(cfg, "background", flags.background);
    if (!flags.accept_threshold.empty()) apply_key(cfg, "accept_threshold", flags.accept_threshold);
    if (!flags.binary_threshold.empty()) apply_key(cfg, "binary_threshold", flags.binary_threshold);
    if (!flags.scales.empty()) apply_key(cfg, "scales", flags.scales);
    if (!flags.out.empty()) apply_key(cfg, "out", flags.out);
    return cfg;
}

std::vector<Template> require_templates(const RunConfig& cfg) {
    if (cfg.templates.empty()) {
        throw std::runtime_error("a template manifest is required (--templates or config)");
    }
    return load_templates(cfg.templates);
}

const MatchResult& best_result(const Classification& cls) {
    const MatchResult* best = &cls.per_template.front();
    for (const MatchResult& r : cls.per_template) {
        if (r.score > best->score) best = &r;
    }
    return *best;
}

bool is_image_file(const fs::path& path) {
    std::string ext = path.extension().string();
    for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return ext == ".pgm" || ext == ".ppm" || ext == ".png";
}

std::vector<fs::path> list_frames(const fs::path& dir) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && is_image_file(entry.path())) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
    return files;
}

struct LabeledFrame {
    fs::path path;
    ClassLabel label;
};

// Sidecar lines are "<frame path> <label>"; the label is the last token.
std::vector<LabeledFrame> parse_labels_file(const fs::path& labels_path, const fs::path& base) {
    std::ifstream in(labels_path);
    if (!in) throw std::runtime_error("cannot open labels file " + labels_path.string());
    std::vector<LabeledFrame> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t\r");
        line = line.substr(begin, end - begin + 1);

        const auto split = line.find_last_of(" \t");
        if (split == std::string::npos) {
            throw std::runtime_error(labels_path.string() + ":" + std::to_string(line_no) +
                                     ": expected '<frame> <label>'");
        }
        const std::string label_text = line.substr(split + 1);
        std::string path_text = line.substr(0, split);
        const auto path_end = path_text.find_last_not_of(" \t");
        path_text.erase(path_end + 1);

        const auto label = parse_class_label(label_text);
        if (!label) {
            throw std::runtime_error(labels_path.string() + ":" + std::to_string(line_no) +
                                     ": unknown label '" + label_text + "'");
        }
        fs::path frame_path(path_text);
        if (frame_path.is_relative()) frame_path = base / frame_path;
        out.push_back({std::move(frame_path), *label});
    }
    if (out.empty()) throw std::runtime_error("labels file has no entries: " + labels_path.string());
    return out;
}

std::string format_score(double v) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(4) << v;
    return ss.str();
}

std::string format_scale(double v) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(2) << v;
    return ss.str();
}

int cmd_classify(const std::string& image_arg, const FlagValues& flags) {
    const RunConfig cfg = build_config(flags);
    const std::vector<Template> templates = require_templates(cfg);
    const GrayImage frame = load_gray(image_arg);
    const Classification cls = classify(frame, templates, make_match_config(cfg));
    const MatchResult& best = best_result(cls);

    if (cls.label == ClassLabel::NoHand) {
        std::cout << kNoHandMessage << '\n';
    } else {
        std::cout << to_string(cls.label) << '\n';
    }
    std::cout << "score: " << format_score(best.score) << "  scale: " << format_scale(best.scale)
              << "  offset: " << best.u << ',' << best.v << '\n';
    for (const MatchResult& r : cls.per_template) {
        std::cout << "template " << to_string(r.label) << ": " << format_score(r.score)
                  << "  scale " << format_scale(r.scale) << "  offset " << r.u << ',' << r.v << '\n';
    }

    if (!cfg.out.empty()) {
        RgbImage annotated = to_rgb(frame);
        if (cls.label != ClassLabel::NoHand) {
            const Template& t = *std::find_if(templates.begin(), templates.end(),
                                              [&](const Template& tt) { return tt.label == cls.label; });
            BoundingBox box;
            box.x_min = best.u;
            box.y_min = best.v;
            box.x_max = best.u + static_cast<int>(std::lround(t.image.width / best.scale)) - 1;
            box.y_max = best.v + static_cast<int>(std::lround(t.image.height / best.scale)) - 1;
            draw_rect(annotated, box, Color{0, 220, 0}, 2);
        }
        std::ostringstream text;
        text << (cls.label == ClassLabel::NoHand ? std::string(kNoHandMessage)
                                                 : std::string(to_string(cls.label)))
             << "  " << format_score(best.score);
        draw_text(annotated, 2, 2, text.str(), Color{250, 220, 40});
        save_image(annotated, cfg.out);
        std::cout << "annotated: " << cfg.out << '\n';
    }
    return 0;
}

int cmd_run(const std::string& dir_arg, const FlagValues& flags) {
    const RunConfig cfg = build_config(flags);
    const std::vector<Template> templates = require_templates(cfg);

    const fs::path dir(dir_arg);
    if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
    const std::vector<fs::path> files = list_frames(dir);
    if (files.empty()) throw std::runtime_error("no frames in " + dir.string());

    std::vector<GrayImage> frames;
    frames.reserve(files.size());
    for (const fs::path& f : files) {
        GrayImage img = load_gray(f);
        if (!frames.empty() && !img.same_size(frames.front())) {
            throw std::runtime_error("mixed frame dimensions: " + f.string());
        }
        frames.push_back(std::move(img));
    }

    GrayImage background;
    if (cfg.background.empty() || cfg.background == "first-frame") {
        background = frames.front();
    } else {
        background = load_gray(cfg.background);
        if (!background.same_size(frames.front())) {
            throw std::runtime_error("background dimensions do not match the frames");
        }
    }

    const std::vector<FrameDecision> decisions =
        run_pipeline(frames, background, templates, make_pipeline_config(cfg));

    const fs::path out_dir = cfg.out.empty() ? fs::path("handshape_out") : fs::path(cfg.out);
    fs::create_directories(out_dir / "annotated");
    {
        std::ofstream log(out_dir / "decisions.log");
        if (!log) throw std::runtime_error("cannot write " + (out_dir / "decisions.log").string());
        write_decision_log(log, decisions);
    }
    for (std::size_t i = 0; i < frames.size(); ++i) {
        const fs::path name = files[i].stem().string() + std::string(".png");
        save_image(annotate_decision(frames[i], static_cast<int>(i), decisions[i]),
                   out_dir / "annotated" / name);
    }
    std::cout << frames.size() << " frames -> " << (out_dir / "decisions.log").string() << '\n';
    return 0;
}

void print_report(const std::string& name, const ConfusionMatrix& cm) {
    const MetricsReport report = compute_report(cm);
    std::cout << format_summary_table({{name, report}}) << '\n'
              << format_per_class_table(report);
}

int cmd_evaluate(const std::string& target_arg, const std::vector<std::string>& matrix_args,
                 bool include_nohand, const FlagValues& flags) {
    if (!matrix_args.empty()) {
        std::vector<std::pair<std::string, MetricsReport>> rows;
        std::optional<ConfusionMatrix> merged;
        for (const std::string& arg : matrix_args) {
            const auto eq = arg.find('=');
            if (eq == std::string::npos) {
                throw std::runtime_error("--matrix expects NAME=CSV-PATH, got '" + arg + "'");
            }
            const std::string name = arg.substr(0, eq);
            std::ifstream in(arg.substr(eq + 1));
            if (!in) throw std::runtime_error("cannot open matrix csv " + arg.substr(eq + 1));
            const ConfusionMatrix cm = read_csv(in);
            rows.emplace_back(name, compute_report(cm));
            if (merged) {
                merged->merge(cm);
            } else {
                merged = cm;
            }
        }
        if (rows.size() > 1) rows.emplace_back("Overall", compute_report(*merged));
        std::cout << format_summary_table(rows);
        return 0;
    }

    if (target_arg.empty()) {
        throw std::runtime_error("evaluate needs a labels file, a corpus directory, or --matrix");
    }

    RunConfig cfg = build_config(flags);
    const fs::path target(target_arg);

    std::vector<LabeledFrame> labeled;
    std::string report_name;
    if (fs::is_regular_file(target)) {
        labeled = parse_labels_file(target, target.parent_path());
        report_name = target.filename().string();
    } else if (fs::is_directory(target)) {
        report_name = target.filename().string();
        if (report_name.empty()) report_name = target.string();
        if (fs::is_regular_file(target / "labels.txt")) {
            labeled = parse_labels_file(target / "labels.txt", target);
            if (cfg.templates.empty() && fs::is_regular_file(target / "templates" / "manifest.txt")) {
                cfg.templates = (target / "templates" / "manifest.txt").string();
            }
            // Every image under frames/ must carry a label.
            if (fs::is_directory(target / "frames")) {
                for (const fs::path& f : list_frames(target / "frames")) {
                    const bool known = std::any_of(labeled.begin(), labeled.end(),
                                                   [&](const LabeledFrame& lf) {
                                                       return fs::weakly_canonical(lf.path) ==
                                                              fs::weakly_canonical(f);
                                                   });
                    if (!known) throw std::runtime_error("frame without label: " + f.string());
                }
            }
        } else {
            // Per-class layout: immediate subdirectories named after labels.
            for (const auto& entry : fs::directory_iterator(target)) {
                if (!entry.is_directory()) continue;
                std::string name = entry.path().filename().string();
                if (!name.empty()) name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
                if (name == "Thumbsup") name = "ThumbsUp";
                const auto label = parse_class_label(name);
                if (!label) continue;
                for (const fs::path& f : list_frames(entry.path())) labeled.push_back({f, *label});
            }
            if (labeled.empty()) {
                throw std::runtime_error("no labels.txt and no class-named subdirectories in " +
                                         target.string());
            }
            std::sort(labeled.begin(), labeled.end(),
                      [](const LabeledFrame& a, const LabeledFrame& b) { return a.path < b.path; });
        }
    } else {
        throw std::runtime_error("no such file or directory: " + target.string());
    }

    const std::vector<Template> templates = require_templates(cfg);
    const MatchConfig match_cfg = make_match_config(cfg);

    std::vector<ClassLabel> classes{ClassLabel::Rock, ClassLabel::Paper, ClassLabel::Scissors,
                                    ClassLabel::ThumbsUp};
    if (include_nohand) classes.push_back(ClassLabel::NoHand);
    ConfusionMatrix cm(classes);

    std::int64_t skipped = 0;
    for (const LabeledFrame& lf : labeled) {
        const GrayImage frame = load_gray(lf.path);
        const ClassLabel predicted = classify(frame, templates, match_cfg).label;
        if (cm.index_of(lf.label) < 0 || cm.index_of(predicted) < 0) {
            ++skipped;
            continue;
        }
        cm.add(lf.label, predicted);
    }
    if (cm.total() == 0) throw std::runtime_error("no usable outcomes (all involved NoHand)");

    print_report(report_name, cm);
    if (skipped > 0) {
        std::cout << "\nskipped " << skipped
                  << " outcome(s) involving NoHand; rerun with --include-nohand to count them\n";
    }

    if (!cfg.out.empty()) {
        const fs::path out_dir(cfg.out);
        fs::create_directories(out_dir);
        std::ofstream csv(out_dir / "confusion_matrix.csv");
        if (!csv) throw std::runtime_error("cannot write confusion matrix csv");
        write_csv(cm, csv);
        std::ofstream report_file(out_dir / "report.txt");
        const MetricsReport report = compute_report(cm);
        report_file << format_summary_table({{report_name, report}}) << '\n'
                    << format_per_class_table(report);
        std::cout << "\nwrote " << (out_dir / "confusion_matrix.csv").string() << '\n';
    } else {
        std::cout << '\n';
        write_csv(cm, std::cout);
    }
    return 0;
}

int cmd_synth(const std::string& spec_arg, const std::string& seed_arg, const FlagValues& flags) {
    const RunConfig cfg = build_config(flags);
    SynthSpec spec = parse_synth_spec_file(spec_arg);
    if (!seed_arg.empty()) {
        try {
            spec.seed = static_cast<std::uint32_t>(std::stoul(seed_arg));
        } catch (const std::exception&) {
            throw std::runtime_error("--seed expects an unsigned integer, got '" + seed_arg + "'");
        }
    }
    const fs::path out_dir = cfg.out.empty() ? fs::path("synth_out") : fs::path(cfg.out);
    write_sequence(spec, out_dir);
    std::cout << "wrote " << spec.frame_count << " frame(s) to " << out_dir.string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hand-shape template matching toolkit"};
    app.require_subcommand(1);

    FlagValues classify_flags;
    std::string classify_image;
    CLI::App* classify_cmd = app.add_subcommand("classify", "classify a single image");
    classify_cmd->add_option("image", classify_image, "image to classify")->required();
    add_common_options(*classify_cmd, classify_flags);

    FlagValues run_flags;
    std::string run_dir;
    CLI::App* run_cmd = app.add_subcommand("run", "run the pipeline over a frame directory");
    run_cmd->add_option("dir", run_dir, "directory of frames, processed in filename order")
        ->required();
    add_common_options(*run_cmd, run_flags);

    FlagValues eval_flags;
    std::string eval_target;
    std::vector<std::string> eval_matrices;
    bool include_nohand = false;
    CLI::App* eval_cmd = app.add_subcommand("evaluate", "score predictions against ground truth");
    eval_cmd->add_option("target", eval_target,
                         "labels file, or directory with labels.txt or class subdirectories");
    eval_cmd->add_option("--matrix", eval_matrices,
                         "NAME=CSV confusion matrix to report instead of classifying");
    eval_cmd->add_flag("--include-nohand", include_nohand, "track NoHand as a fifth class");
    add_common_options(*eval_cmd, eval_flags);

    FlagValues synth_flags;
    std::string synth_spec;
    std::string synth_seed;
    CLI::App* synth_cmd = app.add_subcommand("synth", "generate a synthetic corpus");
    synth_cmd->add_option("spec", synth_spec, "synthesis spec file")->required();
    synth_cmd->add_option("--seed", synth_seed, "override the noise seed from the spec file");
    add_common_options(*synth_cmd, synth_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(classify_image, classify_flags);
        if (run_cmd->parsed()) return cmd_run(run_dir, run_flags);
        if (eval_cmd->parsed()) {
            return cmd_evaluate(eval_target, eval_matrices, include_nohand, eval_flags);
        }
        if (synth_cmd->parsed()) return cmd_synth(synth_spec, synth_seed, synth_flags);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
