#pragma once

#include <Eigen/Core>
#include <map>
#include <set>
#include <vector>

#include "morphkern/grid.hpp"

namespace morphkern {

// Linear head applied per cell: score_c = weights_c . f + bias_c.
struct LinearClassifier {
    Eigen::MatrixXd weights;     // C x d
    Eigen::VectorXd bias;        // C
    std::vector<int> class_ids;  // C unique ids

    int class_count() const { return static_cast<int>(class_ids.size()); }
    int dim() const { return static_cast<int>(weights.cols()); }
};

LinearClassifier make_linear_classifier(Eigen::MatrixXd weights, Eigen::VectorXd bias,
                                        std::vector<int> class_ids);

// argmax over classes; ties go to the lowest class id.
int classify(const LinearClassifier& clf, const FeatureVec& f);

ClassGrid dense_classify(const FeatureGrid& features, const LinearClassifier& clf);

struct EvalReport {
    double miou = 0.0;
    double noise_pct = 0.0;
    std::map<int, double> per_class_iou;  // ground-truth classes only
};

// Unweighted mean IoU over the classes present in truth.
double miou(const ClassGrid& pred, const ClassGrid& truth);

// Percentage of cells whose predicted class is absent from truth_classes.
double noise_pct(const ClassGrid& pred, const std::set<int>& truth_classes);

EvalReport evaluate(const ClassGrid& pred, const ClassGrid& truth);

}  // namespace morphkern
