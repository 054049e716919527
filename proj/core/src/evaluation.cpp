#include "handshape/evaluation.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace handshape {

ConfusionMatrix::ConfusionMatrix(std::vector<ClassLabel> classes)
    : classes_(std::move(classes)),
      counts_(classes_.size() * classes_.size(), 0) {
    if (classes_.empty()) throw std::invalid_argument("ConfusionMatrix: empty class list");
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        for (std::size_t j = i + 1; j < classes_.size(); ++j) {
            if (classes_[i] == classes_[j]) {
                throw std::invalid_argument("ConfusionMatrix: duplicate class in list");
            }
        }
    }
}

ConfusionMatrix ConfusionMatrix::shape_classes() {
    return ConfusionMatrix({ClassLabel::Rock, ClassLabel::Paper, ClassLabel::Scissors,
                            ClassLabel::ThumbsUp});
}

int ConfusionMatrix::index_of(ClassLabel label) const {
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        if (classes_[i] == label) return static_cast<int>(i);
    }
    return -1;
}

std::int64_t ConfusionMatrix::at(int actual, int predicted) const {
    if (actual < 0 || actual >= size() || predicted < 0 || predicted >= size()) {
        throw std::invalid_argument("ConfusionMatrix::at: index out of range");
    }
    return counts_[static_cast<std::size_t>(actual) * classes_.size() + predicted];
}

void ConfusionMatrix::set(int actual, int predicted, std::int64_t count) {
    if (actual < 0 || actual >= size() || predicted < 0 || predicted >= size()) {
        throw std::invalid_argument("ConfusionMatrix::set: index out of range");
    }
    if (count < 0) throw std::invalid_argument("ConfusionMatrix::set: negative count");
    counts_[static_cast<std::size_t>(actual) * classes_.size() + predicted] = count;
}

void ConfusionMatrix::add(ClassLabel actual, ClassLabel predicted, std::int64_t n) {
    const int a = index_of(actual);
    const int p = index_of(predicted);
    if (a < 0) {
        throw std::invalid_argument("ConfusionMatrix::add: untracked actual label " +
                                    std::string(to_string(actual)));
    }
    if (p < 0) {
        throw std::invalid_argument("ConfusionMatrix::add: untracked predicted label " +
                                    std::string(to_string(predicted)));
    }
    if (n < 0) throw std::invalid_argument("ConfusionMatrix::add: negative count");
    counts_[static_cast<std::size_t>(a) * classes_.size() + static_cast<std::size_t>(p)] += n;
}

void ConfusionMatrix::merge(const ConfusionMatrix& other) {
    if (other.classes_ != classes_) {
        throw std::invalid_argument("ConfusionMatrix::merge: class lists differ");
    }
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
}

std::int64_t ConfusionMatrix::total() const {
    std::int64_t t = 0;
    for (std::int64_t c : counts_) t += c;
    return t;
}

std::int64_t ConfusionMatrix::trace() const {
    std::int64_t t = 0;
    for (int i = 0; i < size(); ++i) t += at(i, i);
    return t;
}

double accuracy(const ConfusionMatrix& cm) {
    const std::int64_t total = cm.total();
    if (total == 0) throw std::invalid_argument("accuracy: empty matrix");
    return static_cast<double>(cm.trace()) / static_cast<double>(total);
}

ClassMetrics per_class_metrics(const ConfusionMatrix& cm, ClassLabel label) {
    const int c = cm.index_of(label);
    if (c < 0) {
        throw std::invalid_argument("per_class_metrics: untracked label " +
                                    std::string(to_string(label)));
    }
    std::int64_t tp = cm.at(c, c);
    std::int64_t fp = 0;
    std::int64_t fn = 0;
    for (int i = 0; i < cm.size(); ++i) {
        if (i == c) continue;
        fp += cm.at(i, c);
        fn += cm.at(c, i);
    }
    ClassMetrics m;
    if (tp + fp > 0) m.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    if (tp + fn > 0) m.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
    if (m.precision + m.recall > 0.0) {
        m.f1 = 2.0 * m.precision * m.recall / (m.precision + m.recall);
    }
    return m;
}

double macro_f1(const ConfusionMatrix& cm) {
    double total = 0.0;
    for (ClassLabel label : cm.classes()) total += per_class_metrics(cm, label).f1;
    return total / static_cast<double>(cm.size());
}

MetricsReport compute_report(const ConfusionMatrix& cm) {
    MetricsReport report;
    report.accuracy = accuracy(cm);
    double f1_total = 0.0;
    for (ClassLabel label : cm.classes()) {
        const ClassMetrics m = per_class_metrics(cm, label);
        f1_total += m.f1;
        report.per_class.emplace_back(label, m);
    }
    report.macro_f1 = f1_total / static_cast<double>(cm.size());
    return report;
}

void write_csv(const ConfusionMatrix& cm, std::ostream& out) {
    for (ClassLabel label : cm.classes()) out << ',' << to_string(label);
    out << '\n';
    for (int i = 0; i < cm.size(); ++i) {
        out << to_string(cm.classes()[static_cast<std::size_t>(i)]);
        for (int j = 0; j < cm.size(); ++j) out << ',' << cm.at(i, j);
        out << '\n';
    }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

ConfusionMatrix read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("confusion csv: empty input");
    std::vector<std::string> header = split_csv_line(line);
    if (header.size() < 2) throw std::runtime_error("confusion csv: malformed header");
    std::vector<ClassLabel> classes;
    for (std::size_t i = 1; i < header.size(); ++i) {
        const auto label = parse_class_label(trim(header[i]));
        if (!label) throw std::runtime_error("confusion csv: unknown class '" + header[i] + "'");
        classes.push_back(*label);
    }
    ConfusionMatrix cm(std::move(classes));

    int rows = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != static_cast<std::size_t>(cm.size()) + 1) {
            throw std::runtime_error("confusion csv: row with wrong cell count");
        }
        const auto actual = parse_class_label(trim(cells[0]));
        if (!actual) throw std::runtime_error("confusion csv: unknown row class '" + cells[0] + "'");
        const int a = cm.index_of(*actual);
        if (a < 0) throw std::runtime_error("confusion csv: row class missing from header");
        for (int j = 0; j < cm.size(); ++j) {
            const std::string cell = trim(cells[static_cast<std::size_t>(j) + 1]);
            std::size_t consumed = 0;
            long long value = 0;
            try {
                value = std::stoll(cell, &consumed);
            } catch (const std::exception&) {
                throw std::runtime_error("confusion csv: non-numeric count '" + cell + "'");
            }
            if (consumed != cell.size() || value < 0) {
                throw std::runtime_error("confusion csv: bad count '" + cell + "'");
            }
            cm.set(a, j, value);
        }
        ++rows;
    }
    if (rows != cm.size()) throw std::runtime_error("confusion csv: wrong row count");
    return cm;
}

namespace {

std::string fixed3(double v) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(3) << v;
    return ss.str();
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string format_summary_table(const std::vector<std::pair<std::string, MetricsReport>>& rows) {
    std::size_t name_width = std::string("Set").size();
    for (const auto& [name, report] : rows) name_width = std::max(name_width, name.size());
    std::ostringstream out;
    out << pad("Set", name_width) << "  " << pad("Accuracy", 8) << "  Average F1\n";
    for (const auto& [name, report] : rows) {
        out << pad(name, name_width) << "  " << pad(fixed3(report.accuracy), 8) << "  "
            << fixed3(report.macro_f1) << '\n';
    }
    return out.str();
}

std::string format_per_class_table(const MetricsReport& report) {
    std::size_t name_width = std::string("Class").size();
    for (const auto& [label, metrics] : report.per_class) {
        name_width = std::max(name_width, to_string(label).size());
    }
    std::ostringstream out;
    out << pad("Class", name_width) << "  Precision  Recall  F1\n";
    for (const auto& [label, metrics] : report.per_class) {
        out << pad(std::string(to_string(label)), name_width) << "  "
            << pad(fixed3(metrics.precision), 9) << "  " << pad(fixed3(metrics.recall), 6) << "  "
            << fixed3(metrics.f1) << '\n';
    }
    return out.str();
}

}  // namespace handshape
