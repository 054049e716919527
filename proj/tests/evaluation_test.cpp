#include "handshape/evaluation.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"

using namespace handshape;

namespace {

// Stored reference matrices, 80 outcomes each, rows = actual class in the
// order Rock, ThumbsUp, Scissors, Paper.
const std::vector<ClassLabel> kReferenceOrder{ClassLabel::Rock, ClassLabel::ThumbsUp,
                                          ClassLabel::Scissors, ClassLabel::Paper};

ConfusionMatrix from_counts(const int counts[4][4]) {
    ConfusionMatrix cm(kReferenceOrder);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) cm.set(i, j, counts[i][j]);
    }
    return cm;
}

ConfusionMatrix lighting_matrix() {
    static const int counts[4][4] = {{18, 2, 0, 0}, {1, 18, 1, 0}, {3, 0, 16, 1}, {3, 0, 2, 15}};
    return from_counts(counts);
}

ConfusionMatrix translation_matrix() {
    static const int counts[4][4] = {{19, 1, 0, 0}, {1, 18, 1, 0}, {2, 0, 18, 0}, {1, 0, 1, 18}};
    return from_counts(counts);
}

ConfusionMatrix proximity_matrix() {
    static const int counts[4][4] = {{19, 1, 0, 0}, {0, 19, 1, 0}, {2, 0, 18, 0}, {3, 0, 1, 16}};
    return from_counts(counts);
}

}  // namespace

TEST_CASE("accumulating outcomes fills the expected cells") {
    ConfusionMatrix cm = ConfusionMatrix::shape_classes();
    cm.add(ClassLabel::Rock, ClassLabel::Rock);
    cm.add(ClassLabel::Rock, ClassLabel::Paper);
    cm.add(ClassLabel::Rock, ClassLabel::Paper);
    CHECK(cm.at(cm.index_of(ClassLabel::Rock), cm.index_of(ClassLabel::Rock)) == 1);
    CHECK(cm.at(cm.index_of(ClassLabel::Rock), cm.index_of(ClassLabel::Paper)) == 2);
    CHECK(cm.total() == 3);
    CHECK(cm.trace() == 1);
    CHECK_THROWS_AS(cm.add(ClassLabel::NoHand, ClassLabel::Rock), std::invalid_argument);
    CHECK_THROWS_AS(cm.add(ClassLabel::Rock, ClassLabel::NoHand), std::invalid_argument);
}

TEST_CASE("matrix construction rejects bad class lists") {
    CHECK_THROWS_AS(ConfusionMatrix(std::vector<ClassLabel>{}), std::invalid_argument);
    CHECK_THROWS_AS(ConfusionMatrix({ClassLabel::Rock, ClassLabel::Rock}), std::invalid_argument);
}

TEST_CASE("the lighting reference matrix yields the recorded metrics") {
    const ConfusionMatrix cm = lighting_matrix();
    CHECK(cm.total() == 80);
    CHECK(accuracy(cm) == doctest::Approx(0.8375).epsilon(1e-9));
    CHECK(macro_f1(cm) == doctest::Approx(0.8384615385).epsilon(1e-6));

    const ClassMetrics rock = per_class_metrics(cm, ClassLabel::Rock);
    CHECK(rock.precision == doctest::Approx(0.72).epsilon(1e-9));
    CHECK(rock.recall == doctest::Approx(0.9).epsilon(1e-9));
    CHECK(rock.f1 == doctest::Approx(0.8).epsilon(1e-9));
}

TEST_CASE("the translation reference matrix yields the recorded metrics") {
    const ConfusionMatrix cm = translation_matrix();
    CHECK(accuracy(cm) == doctest::Approx(0.9125).epsilon(1e-9));
    CHECK(macro_f1(cm) == doctest::Approx(0.9135415667).epsilon(1e-6));

    const ClassMetrics paper = per_class_metrics(cm, ClassLabel::Paper);
    CHECK(paper.precision == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(paper.recall == doctest::Approx(0.9).epsilon(1e-9));
    CHECK(paper.f1 == doctest::Approx(0.9473684211).epsilon(1e-6));
}

TEST_CASE("the proximity reference matrix yields the recorded metrics") {
    const ConfusionMatrix cm = proximity_matrix();
    CHECK(accuracy(cm) == doctest::Approx(0.9).epsilon(1e-9));
    CHECK(macro_f1(cm) == doctest::Approx(0.9006313131).epsilon(1e-6));
}

TEST_CASE("merging the three references gives the combined matrix and metrics") {
    ConfusionMatrix combined = lighting_matrix();
    combined.merge(translation_matrix());
    combined.merge(proximity_matrix());
    CHECK(combined.total() == 240);
    CHECK(combined.trace() == 212);
    CHECK(combined.at(0, 0) == 56);
    CHECK(combined.at(1, 2) == 3);
    CHECK(combined.at(3, 0) == 7);
    CHECK(accuracy(combined) == doctest::Approx(212.0 / 240.0).epsilon(1e-12));
    CHECK(macro_f1(combined) == doctest::Approx(0.8844283188).epsilon(1e-6));

    ConfusionMatrix other = ConfusionMatrix::shape_classes();
    CHECK_THROWS_AS(combined.merge(other), std::invalid_argument);
}

TEST_CASE("a perfect diagonal scores 1 everywhere") {
    ConfusionMatrix cm = ConfusionMatrix::shape_classes();
    for (ClassLabel label : cm.classes()) cm.add(label, label, 5);
    CHECK(accuracy(cm) == 1.0);
    CHECK(macro_f1(cm) == 1.0);
    const MetricsReport report = compute_report(cm);
    for (const auto& [label, m] : report.per_class) {
        CHECK(m.precision == 1.0);
        CHECK(m.recall == 1.0);
        CHECK(m.f1 == 1.0);
    }
}

TEST_CASE("zero-denominator metrics collapse to 0 by convention") {
    ConfusionMatrix cm = ConfusionMatrix::shape_classes();
    cm.add(ClassLabel::Rock, ClassLabel::Paper);  // Scissors row and column stay empty
    const ClassMetrics scissors = per_class_metrics(cm, ClassLabel::Scissors);
    CHECK(scissors.precision == 0.0);
    CHECK(scissors.recall == 0.0);
    CHECK(scissors.f1 == 0.0);

    const ClassMetrics rock = per_class_metrics(cm, ClassLabel::Rock);
    CHECK(rock.precision == 0.0);  // no Rock predictions at all
    CHECK(rock.recall == 0.0);
    CHECK(rock.f1 == 0.0);
}

TEST_CASE("accuracy of an empty matrix is an error") {
    const ConfusionMatrix cm = ConfusionMatrix::shape_classes();
    CHECK_THROWS_AS(accuracy(cm), std::invalid_argument);
}

TEST_CASE("per-class true positives and row sums tie back to trace and total") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> count(0, 20);
    for (int round = 0; round < 50; ++round) {
        ConfusionMatrix cm = ConfusionMatrix::shape_classes();
        for (int i = 0; i < cm.size(); ++i) {
            for (int j = 0; j < cm.size(); ++j) cm.set(i, j, count(rng));
        }
        if (cm.total() == 0) continue;

        std::int64_t tp_sum = 0;
        std::int64_t support_sum = 0;
        for (int i = 0; i < cm.size(); ++i) {
            tp_sum += cm.at(i, i);
            for (int j = 0; j < cm.size(); ++j) support_sum += cm.at(i, j);
        }
        CHECK(tp_sum == cm.trace());
        CHECK(support_sum == cm.total());

        for (ClassLabel label : cm.classes()) {
            const ClassMetrics m = per_class_metrics(cm, label);
            if (m.precision > 0.0 && m.recall > 0.0) {
                CHECK(m.f1 >= std::min(m.precision, m.recall) - 1e-12);
                CHECK(m.f1 <= (m.precision + m.recall) / 2.0 + 1e-12);
            }
        }
    }
}

TEST_CASE("metrics are invariant under class relabeling and count scaling") {
    const ConfusionMatrix base = lighting_matrix();

    // Same outcomes, classes listed in a different order.
    ConfusionMatrix permuted({ClassLabel::Paper, ClassLabel::Rock, ClassLabel::ThumbsUp,
                              ClassLabel::Scissors});
    for (int i = 0; i < base.size(); ++i) {
        for (int j = 0; j < base.size(); ++j) {
            permuted.set(permuted.index_of(base.classes()[static_cast<std::size_t>(i)]),
                         permuted.index_of(base.classes()[static_cast<std::size_t>(j)]),
                         base.at(i, j));
        }
    }
    CHECK(accuracy(permuted) == doctest::Approx(accuracy(base)).epsilon(1e-12));
    CHECK(macro_f1(permuted) == doctest::Approx(macro_f1(base)).epsilon(1e-12));

    ConfusionMatrix scaled(base.classes());
    for (int i = 0; i < base.size(); ++i) {
        for (int j = 0; j < base.size(); ++j) scaled.set(i, j, base.at(i, j) * 7);
    }
    CHECK(accuracy(scaled) == doctest::Approx(accuracy(base)).epsilon(1e-12));
    CHECK(macro_f1(scaled) == doctest::Approx(macro_f1(base)).epsilon(1e-12));
    for (ClassLabel label : base.classes()) {
        const ClassMetrics a = per_class_metrics(base, label);
        const ClassMetrics b = per_class_metrics(scaled, label);
        CHECK(a.precision == doctest::Approx(b.precision).epsilon(1e-12));
        CHECK(a.recall == doctest::Approx(b.recall).epsilon(1e-12));
        CHECK(a.f1 == doctest::Approx(b.f1).epsilon(1e-12));
    }
}

TEST_CASE("csv export and import round-trip the matrix") {
    const ConfusionMatrix cm = lighting_matrix();
    std::stringstream buffer;
    write_csv(cm, buffer);

    const std::string text = buffer.str();
    CHECK(text.substr(0, text.find('\n')) == ",Rock,ThumbsUp,Scissors,Paper");

    const ConfusionMatrix loaded = read_csv(buffer);
    REQUIRE(loaded.classes() == cm.classes());
    for (int i = 0; i < cm.size(); ++i) {
        for (int j = 0; j < cm.size(); ++j) CHECK(loaded.at(i, j) == cm.at(i, j));
    }
}

TEST_CASE("read_csv rejects malformed input") {
    const auto reject = [](const std::string& text) {
        std::stringstream buffer(text);
        CHECK_THROWS_AS(read_csv(buffer), std::runtime_error);
    };
    reject("");
    reject(",Rock,Banana\nRock,1,2\nBanana,3,4\n");
    reject(",Rock,Paper\nRock,1\nPaper,2,3\n");          // short row
    reject(",Rock,Paper\nRock,1,2\n");                   // missing row
    reject(",Rock,Paper\nRock,1,2\nPaper,x,4\n");        // non-numeric
    reject(",Rock,Paper\nRock,1,2\nPaper,-1,4\n");       // negative
    reject(",Rock,Paper\nScissors,1,2\nPaper,3,4\n");    // row class not in header
}

TEST_CASE("summary and per-class tables render aligned fixed-point columns") {
    ConfusionMatrix cm = ConfusionMatrix::shape_classes();
    for (ClassLabel label : cm.classes()) cm.add(label, label, 3);
    const MetricsReport report = compute_report(cm);

    const std::string summary = format_summary_table({{"clean", report}});
    CHECK(summary.find("Set") != std::string::npos);
    CHECK(summary.find("Accuracy") != std::string::npos);
    CHECK(summary.find("Average F1") != std::string::npos);
    CHECK(summary.find("clean") != std::string::npos);
    CHECK(summary.find("1.000") != std::string::npos);

    const std::string per_class = format_per_class_table(report);
    CHECK(per_class.find("Precision") != std::string::npos);
    CHECK(per_class.find("Recall") != std::string::npos);
    CHECK(per_class.find("ThumbsUp") != std::string::npos);
    for (const char* name : {"Rock", "Paper", "Scissors", "ThumbsUp"}) {
        CHECK(per_class.find(name) != std::string::npos);
    }
}
