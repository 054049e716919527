#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "handshape/matching.hpp"

namespace handshape {

// Square grid of outcome counts, counts[actual][predicted], over an ordered
// class list. NoHand is excluded unless explicitly listed.
class ConfusionMatrix {
public:
    explicit ConfusionMatrix(std::vector<ClassLabel> classes);

    // The four shape classes in declaration order.
    static ConfusionMatrix shape_classes();

    const std::vector<ClassLabel>& classes() const { return classes_; }
    int size() const { return static_cast<int>(classes_.size()); }

    int index_of(ClassLabel label) const;  // -1 when the label is not tracked

    std::int64_t at(int actual, int predicted) const;
    void set(int actual, int predicted, std::int64_t count);

    // Increments counts[actual][predicted]. Throws on labels outside the
    // class list.
    void add(ClassLabel actual, ClassLabel predicted, std::int64_t n = 1);

    // Elementwise sum; the other matrix must carry the same class list.
    void merge(const ConfusionMatrix& other);

    std::int64_t total() const;
    std::int64_t trace() const;

private:
    std::vector<ClassLabel> classes_;
    std::vector<std::int64_t> counts_;  // row-major [actual][predicted]
};

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

struct MetricsReport {
    double accuracy = 0.0;
    double macro_f1 = 0.0;
    std::vector<std::pair<ClassLabel, ClassMetrics>> per_class;
};

// trace/total. Throws when the matrix holds no outcomes.
double accuracy(const ConfusionMatrix& cm);

// One-vs-rest precision/recall/F1 for one class; metrics with a zero
// denominator are 0 by convention.
ClassMetrics per_class_metrics(const ConfusionMatrix& cm, ClassLabel label);

// Unweighted mean of per-class F1 over the matrix's classes.
double macro_f1(const ConfusionMatrix& cm);

MetricsReport compute_report(const ConfusionMatrix& cm);

// CSV with a header row of class names; rows are actual classes.
void write_csv(const ConfusionMatrix& cm, std::ostream& out);
ConfusionMatrix read_csv(std::istream& in);

// Aligned text tables: one summary row per named report, and the per-class
// breakdown of a single report.
std::string format_summary_table(const std::vector<std::pair<std::string, MetricsReport>>& rows);
std::string format_per_class_table(const MetricsReport& report);

}  // namespace handshape
