#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mscrnn/types.hpp"

namespace mscrnn {

using Shape = std::vector<int>;

int64_t shape_size(const Shape& s);
std::string shape_str(const Shape& s);

/// One recorded operation result. Holds the forward value, the (lazily
/// allocated) gradient buffer and a closure that routes the node's gradient
/// to its parents.
struct TensorNode {
  Shape shape;
  std::vector<double> value;
  std::vector<double> grad;
  bool requires_grad = false;
  uint64_t seq = 0;  // recording order; parents always precede children
  std::vector<std::shared_ptr<TensorNode>> parents;
  std::function<void(TensorNode&)> backward;

  int64_t size() const { return int64_t(value.size()); }
  void ensure_grad() {
    if (grad.empty()) grad.assign(value.size(), 0.0);
  }
};

/// Value-semantic handle to a node of the recorded computation graph.
/// Values are immutable after creation except for leaf edits through
/// values_mut() (optimizer updates, finite-difference probes) and gradient
/// accumulation during backward().
class Tensor {
public:
  Tensor() = default;

  static Tensor zeros(Shape shape, bool requires_grad = false);
  static Tensor full(Shape shape, double fill, bool requires_grad = false);
  static Tensor from_data(Shape shape, std::vector<double> data, bool requires_grad = false);
  static Tensor scalar_value(double v, bool requires_grad = false);

  bool defined() const { return node_ != nullptr; }
  const Shape& shape() const { return node_->shape; }
  int64_t size() const { return node_->size(); }
  bool requires_grad() const { return node_->requires_grad; }

  std::span<const double> values() const { return node_->value; }
  std::span<double> values_mut() { return node_->value; }
  double scalar() const;

  bool has_grad() const { return !node_->grad.empty(); }
  std::span<const double> grad() const { return node_->grad; }
  std::span<double> grad_mut() { return node_->grad; }
  void zero_grad() {
    if (!node_->grad.empty()) node_->grad.assign(node_->value.size(), 0.0);
  }

  bool all_finite() const;

  TensorNode* node() const { return node_.get(); }
  const std::shared_ptr<TensorNode>& node_ptr() const { return node_; }

  explicit Tensor(std::shared_ptr<TensorNode> n) : node_(std::move(n)) {}

private:
  std::shared_ptr<TensorNode> node_;
};

/// While alive, newly recorded operations do not track gradients (forward
/// values only). Used for evaluation and finite-difference probes.
class NoGradGuard {
public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

private:
  bool prev_;
};

bool grad_enabled();

namespace tape {
/// Reverse replay: visits the recorded operations reachable from `output`
/// in exact reverse recording order and accumulates gradients into every
/// requires_grad ancestor. `output` must be a scalar.
void backward(const Tensor& output);
}  // namespace tape

// ---- operations -----------------------------------------------------------

/// Same-padded stride-1 cross-correlation. input [Cin,H,W], kernel
/// [Cout,Cin,k,k] with k odd, bias [Cout] (optional overload).
Tensor conv2d(const Tensor& input, const Tensor& kernel, const Tensor& bias);
Tensor conv2d(const Tensor& input, const Tensor& kernel);

/// Elementwise ops. add() also accepts a per-channel bias: a [C,H,W] + b [C].
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor hadamard(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double s);
Tensor sigmoid(const Tensor& a);
Tensor tanh(const Tensor& a);
Tensor relu(const Tensor& a);
Tensor sum(const Tensor& a);

Tensor concat_channels(std::span<const Tensor> parts);
Tensor slice_channels(const Tensor& a, int begin, int count);

/// Per-pixel channel softmax, stabilized by max subtraction.
Tensor softmax_channels(const Tensor& logits);

/// Clamp channels from below at eps and divide by the per-pixel channel sum,
/// returning a valid per-pixel distribution.
Tensor renormalize_channels(const Tensor& t, double eps = 1e-8);

/// Mean over masked pixels of -w_y * log(clamp(p_y, eps, 1)), eps = 1e-8.
/// class_weights (optional) has one entry per channel; empty_mask (optional)
/// reports the defined-as-zero empty-mask case.
Tensor cross_entropy(const Tensor& probabilities, const LabelMap& target, const PixelMask& mask,
                     const std::vector<double>* class_weights = nullptr,
                     bool* empty_mask = nullptr);

}  // namespace mscrnn
