#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "fashmine/classes.hpp"
#include "fashmine/common.hpp"
#include "fashmine/corpus.hpp"
#include "fashmine/errors.hpp"

namespace fashmine {

struct CnnConfig {
  int vocab_size = 0;
  int embed_dim = 300;
  std::vector<int> filter_widths{3, 4, 5};
  int filters_per_width = 128;
  double dropout_keep = 0.7;
  double l2_constraint = 0.0;  // 0 disables the max-norm constraint
  double learning_rate = 0.01;
  int batch_size = 256;
  int max_seq_len = 200;
  int num_classes = static_cast<int>(kNumClasses);
  int epochs = 10;
  std::uint64_t seed = 0;
  std::string optimizer = "adam";  // "adam" | "sgd"

  void validate() const {
    if (vocab_size < 2) throw DataError("cnn: vocab_size must be >= 2");
    if (embed_dim <= 0) throw DataError("cnn: embed_dim must be positive");
    if (filter_widths.empty()) throw DataError("cnn: no filter widths");
    for (int w : filter_widths)
      if (w <= 0) throw DataError("cnn: filter widths must be positive");
    if (filters_per_width <= 0)
      throw DataError("cnn: filters_per_width must be positive");
    if (dropout_keep <= 0.0 || dropout_keep > 1.0)
      throw DataError("cnn: dropout keep probability must be in (0,1]");
    if (num_classes <= 0) throw DataError("cnn: num_classes must be positive");
    const int max_w =
        *std::max_element(filter_widths.begin(), filter_widths.end());
    if (max_seq_len < max_w)
      throw DataError("cnn: max_seq_len shorter than widest filter");
    if (optimizer != "adam" && optimizer != "sgd")
      throw DataError("cnn: unknown optimizer: " + optimizer);
  }

  int total_filters() const {
    return filters_per_width * static_cast<int>(filter_widths.size());
  }
};

inline void to_json(nlohmann::json& j, const CnnConfig& c) {
  j = nlohmann::json{{"vocab_size", c.vocab_size},
                     {"embed_dim", c.embed_dim},
                     {"filter_widths", c.filter_widths},
                     {"filters_per_width", c.filters_per_width},
                     {"dropout_keep", c.dropout_keep},
                     {"l2_constraint", c.l2_constraint},
                     {"learning_rate", c.learning_rate},
                     {"batch_size", c.batch_size},
                     {"max_seq_len", c.max_seq_len},
                     {"num_classes", c.num_classes},
                     {"epochs", c.epochs},
                     {"seed", c.seed},
                     {"optimizer", c.optimizer}};
}

inline void from_json(const nlohmann::json& j, CnnConfig& c) {
  CnnConfig defaults;
  c.vocab_size = j.value("vocab_size", defaults.vocab_size);
  c.embed_dim = j.value("embed_dim", defaults.embed_dim);
  c.filter_widths = j.value("filter_widths", defaults.filter_widths);
  c.filters_per_width =
      j.value("filters_per_width", defaults.filters_per_width);
  c.dropout_keep = j.value("dropout_keep", defaults.dropout_keep);
  c.l2_constraint = j.value("l2_constraint", defaults.l2_constraint);
  c.learning_rate = j.value("learning_rate", defaults.learning_rate);
  c.batch_size = j.value("batch_size", defaults.batch_size);
  c.max_seq_len = j.value("max_seq_len", defaults.max_seq_len);
  c.num_classes = j.value("num_classes", defaults.num_classes);
  c.epochs = j.value("epochs", defaults.epochs);
  c.seed = j.value("seed", defaults.seed);
  c.optimizer = j.value("optimizer", defaults.optimizer);
}

// --- vocabulary ---

class Vocab {
 public:
  static constexpr int kPad = 0;
  static constexpr int kUnk = 1;

  Vocab() = default;
  explicit Vocab(std::vector<std::string> words) : words_(std::move(words)) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      ids_.emplace(words_[i], static_cast<int>(i) + 2);
  }

  int id(const std::string& word) const {
    auto it = ids_.find(word);
    return it == ids_.end() ? kUnk : it->second;
  }

  int size() const { return static_cast<int>(words_.size()) + 2; }
  const std::vector<std::string>& words() const { return words_; }

  std::string hash() const {
    std::string joined;
    for (const auto& w : words_) {
      joined += w;
      joined += '\n';
    }
    return to_hex(fnv1a64(joined));
  }

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, int> ids_;
};

// Ids are dense from 2 (0 = padding, 1 = unknown); words ordered by
// frequency descending, ties lexicographic.
inline Vocab build_vocab(const Corpus& corpus, int min_frequency = 1) {
  if (corpus.empty()) throw DataError("build_vocab: empty corpus");
  std::map<std::string, long long> freq;
  for (const auto& p : corpus.posts())
    for (const auto& t : p.tokens)
      if (t.kind == TokenKind::Word && t.normalized) ++freq[*t.normalized];

  std::vector<std::pair<std::string, long long>> entries(freq.begin(),
                                                         freq.end());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<std::string> words;
  for (auto& [w, c] : entries)
    if (c >= min_frequency) words.push_back(w);
  return Vocab(std::move(words));
}

// Pad with id 0 to max_seq_len, truncate beyond it.
inline std::vector<int> encode_tokens(const std::vector<Token>& tokens,
                                      const Vocab& vocab, int max_seq_len) {
  std::vector<int> ids;
  ids.reserve(static_cast<std::size_t>(max_seq_len));
  for (const auto& t : tokens) {
    if (t.kind != TokenKind::Word || !t.normalized) continue;
    if (static_cast<int>(ids.size()) >= max_seq_len) break;
    ids.push_back(vocab.id(*t.normalized));
  }
  ids.resize(static_cast<std::size_t>(max_seq_len), Vocab::kPad);
  return ids;
}

// --- model ---

// All parameters live in one flat double vector:
//   embedding (V x d) | per width: filters (w x d x F) + bias (F)
//   | output weights (F*nw x C) | output bias (C)
class CnnModel {
 public:
  explicit CnnModel(CnnConfig config) : cfg_(std::move(config)) {
    cfg_.validate();
    offsets_.embedding = 0;
    std::size_t at = static_cast<std::size_t>(cfg_.vocab_size) *
                     static_cast<std::size_t>(cfg_.embed_dim);
    for (int w : cfg_.filter_widths) {
      offsets_.filters.push_back(at);
      at += static_cast<std::size_t>(w) *
            static_cast<std::size_t>(cfg_.embed_dim) *
            static_cast<std::size_t>(cfg_.filters_per_width);
      offsets_.filter_biases.push_back(at);
      at += static_cast<std::size_t>(cfg_.filters_per_width);
    }
    offsets_.output_w = at;
    at += static_cast<std::size_t>(cfg_.total_filters()) *
          static_cast<std::size_t>(cfg_.num_classes);
    offsets_.output_b = at;
    at += static_cast<std::size_t>(cfg_.num_classes);
    params_.assign(at, 0.0);
  }

  // Uniform [-0.05, 0.05] weights, zero biases, seeded.
  static CnnModel init(const CnnConfig& config) {
    CnnModel m(config);
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> u(-0.05, 0.05);
    for (double& p : m.params_) p = u(rng);
    for (std::size_t i = 0; i < m.cfg_.filter_widths.size(); ++i) {
      double* b = m.params_.data() + m.offsets_.filter_biases[i];
      std::fill(b, b + m.cfg_.filters_per_width, 0.0);
    }
    double* ob = m.params_.data() + m.offsets_.output_b;
    std::fill(ob, ob + m.cfg_.num_classes, 0.0);
    return m;
  }

  const CnnConfig& config() const { return cfg_; }
  std::vector<double>& params() { return params_; }
  const std::vector<double>& params() const { return params_; }
  std::size_t param_count() const { return params_.size(); }

  const double* embedding() const {
    return params_.data() + offsets_.embedding;
  }
  const double* filters(std::size_t width_index) const {
    return params_.data() + offsets_.filters[width_index];
  }
  const double* filter_bias(std::size_t width_index) const {
    return params_.data() + offsets_.filter_biases[width_index];
  }
  const double* output_w() const { return params_.data() + offsets_.output_w; }
  const double* output_b() const { return params_.data() + offsets_.output_b; }

  std::size_t embedding_offset() const { return offsets_.embedding; }
  std::size_t filters_offset(std::size_t wi) const {
    return offsets_.filters[wi];
  }
  std::size_t filter_bias_offset(std::size_t wi) const {
    return offsets_.filter_biases[wi];
  }
  std::size_t output_w_offset() const { return offsets_.output_w; }
  std::size_t output_b_offset() const { return offsets_.output_b; }

 private:
  struct Offsets {
    std::size_t embedding = 0;
    std::vector<std::size_t> filters;
    std::vector<std::size_t> filter_biases;
    std::size_t output_w = 0;
    std::size_t output_b = 0;
  };

  CnnConfig cfg_;
  Offsets offsets_;
  std::vector<double> params_;
};

struct Batch {
  std::vector<std::vector<int>> ids;        // padded to max_seq_len
  std::vector<std::vector<double>> labels;  // per example, num_classes probs
};

enum class RunMode { Train, Eval };

// Activations recorded by a train-mode forward pass for backward().
struct ForwardCache {
  // [example][width][filter]
  std::vector<std::vector<std::vector<int>>> argmax;
  std::vector<std::vector<std::vector<double>>> pooled;  // post-ReLU max
  std::vector<std::vector<double>> dropout_scale;  // 0 or 1/keep, [ex][feat]
  std::vector<std::vector<double>> logits;
};

namespace detail {

inline void forward_example(const CnnModel& model, const std::vector<int>& ids,
                            RunMode mode, std::mt19937_64* dropout_rng,
                            std::vector<int>* argmax_out,
                            std::vector<double>* pooled_out,
                            std::vector<double>* scale_out,
                            std::vector<double>& logits_out) {
  const auto& cfg = model.config();
  const int L = cfg.max_seq_len;
  const int d = cfg.embed_dim;
  const int F = cfg.filters_per_width;
  const int total = cfg.total_filters();

  std::vector<double> pooled(static_cast<std::size_t>(total), 0.0);
  std::vector<int> argmax(static_cast<std::size_t>(total), 0);

  const double* E = model.embedding();
  for (std::size_t wi = 0; wi < cfg.filter_widths.size(); ++wi) {
    const int w = cfg.filter_widths[wi];
    const double* W = model.filters(wi);
    const double* b = model.filter_bias(wi);
    const int positions = L - w + 1;
    for (int f = 0; f < F; ++f) {
      double best = 0.0;
      int best_t = 0;
      for (int t = 0; t < positions; ++t) {
        double pre = b[f];
        for (int i = 0; i < w; ++i) {
          const double* row =
              E + static_cast<std::size_t>(ids[static_cast<std::size_t>(
                      t + i)]) *
                      static_cast<std::size_t>(d);
          const double* Wrow = W + (static_cast<std::size_t>(i) *
                                        static_cast<std::size_t>(d) +
                                    0) *
                                       static_cast<std::size_t>(F);
          for (int j = 0; j < d; ++j)
            pre += row[j] * Wrow[static_cast<std::size_t>(j) *
                                     static_cast<std::size_t>(F) +
                                 static_cast<std::size_t>(f)];
        }
        const double act = pre > 0.0 ? pre : 0.0;
        if (t == 0 || act > best) {
          best = act;
          best_t = t;
        }
      }
      pooled[wi * static_cast<std::size_t>(F) + static_cast<std::size_t>(f)] =
          best;
      argmax[wi * static_cast<std::size_t>(F) + static_cast<std::size_t>(f)] =
          best_t;
    }
  }

  // Inverted dropout on the pooled feature vector; eval applies nothing.
  std::vector<double> scale(static_cast<std::size_t>(total), 1.0);
  if (mode == RunMode::Train && cfg.dropout_keep < 1.0) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int f = 0; f < total; ++f)
      scale[static_cast<std::size_t>(f)] =
          u(*dropout_rng) < cfg.dropout_keep ? 1.0 / cfg.dropout_keep : 0.0;
  }

  const double* Wout = model.output_w();
  const double* bout = model.output_b();
  logits_out.assign(static_cast<std::size_t>(cfg.num_classes), 0.0);
  for (int c = 0; c < cfg.num_classes; ++c) {
    double z = bout[c];
    for (int f = 0; f < total; ++f)
      z += pooled[static_cast<std::size_t>(f)] *
           scale[static_cast<std::size_t>(f)] *
           Wout[static_cast<std::size_t>(f) *
                    static_cast<std::size_t>(cfg.num_classes) +
                static_cast<std::size_t>(c)];
    logits_out[static_cast<std::size_t>(c)] = z;
  }

  if (argmax_out) {
    argmax_out->assign(argmax.begin(), argmax.end());
  }
  if (pooled_out) *pooled_out = std::move(pooled);
  if (scale_out) *scale_out = std::move(scale);
}

}  // namespace detail

// Batch forward. Train mode needs the dropout RNG and fills the cache.
inline std::vector<std::vector<double>> forward(
    const CnnModel& model, const std::vector<std::vector<int>>& batch_ids,
    RunMode mode = RunMode::Eval, std::mt19937_64* dropout_rng = nullptr,
    ForwardCache* cache = nullptr) {
  const auto& cfg = model.config();
  if (mode == RunMode::Train && cfg.dropout_keep < 1.0 && !dropout_rng)
    throw DataError("forward: train mode requires a dropout RNG");
  for (const auto& ids : batch_ids) {
    if (static_cast<int>(ids.size()) != cfg.max_seq_len)
      throw DataError("forward: sequence not padded to max_seq_len");
    for (int id : ids)
      if (id < 0 || id >= cfg.vocab_size)
        throw DataError("forward: token id out of range");
  }

  const std::size_t nw = cfg.filter_widths.size();
  std::vector<std::vector<double>> logits(batch_ids.size());
  if (cache) {
    cache->argmax.assign(batch_ids.size(), {});
    cache->pooled.assign(batch_ids.size(), {});
    cache->dropout_scale.assign(batch_ids.size(), {});
    cache->logits.assign(batch_ids.size(), {});
  }
  for (std::size_t ex = 0; ex < batch_ids.size(); ++ex) {
    std::vector<int> argmax;
    std::vector<double> pooled, scale;
    detail::forward_example(model, batch_ids[ex], mode, dropout_rng,
                            cache ? &argmax : nullptr,
                            cache ? &pooled : nullptr,
                            cache ? &scale : nullptr, logits[ex]);
    if (cache) {
      const int F = cfg.filters_per_width;
      cache->argmax[ex].assign(nw, {});
      cache->pooled[ex].assign(nw, {});
      for (std::size_t wi = 0; wi < nw; ++wi) {
        auto first = static_cast<long>(wi) * F;
        cache->argmax[ex][wi].assign(argmax.begin() + first,
                                     argmax.begin() + first + F);
        cache->pooled[ex][wi].assign(pooled.begin() + first,
                                     pooled.begin() + first + F);
      }
      cache->dropout_scale[ex] = std::move(scale);
      cache->logits[ex] = logits[ex];
    }
  }
  return logits;
}

// Noise-aware multi-label loss: mean over classes and batch of
// -(p log sigma(y) + (1-p) log(1-sigma(y))), in the stable
// max(y,0) - p*y + log(1+exp(-|y|)) form.
inline double noise_aware_loss(const std::vector<std::vector<double>>& logits,
                               const std::vector<std::vector<double>>& labels) {
  if (logits.size() != labels.size())
    throw DataError("noise_aware_loss: batch size mismatch");
  if (logits.empty()) throw DataError("noise_aware_loss: empty batch");
  double total = 0.0;
  std::size_t terms = 0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    if (logits[i].size() != labels[i].size())
      throw DataError("noise_aware_loss: class count mismatch");
    for (std::size_t c = 0; c < logits[i].size(); ++c) {
      const double y = logits[i][c];
      const double p = labels[i][c];
      total += std::max(y, 0.0) - p * y + std::log1p(std::exp(-std::fabs(y)));
      ++terms;
    }
  }
  return total / static_cast<double>(terms);
}

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// Exact gradients of noise_aware_loss for every parameter, including the
// embedding rows the batch touched. Requires a train-mode cache.
inline std::vector<double> backward(const CnnModel& model,
                                    const ForwardCache& cache,
                                    const std::vector<std::vector<int>>&
                                        batch_ids,
                                    const std::vector<std::vector<double>>&
                                        labels) {
  const auto& cfg = model.config();
  const std::size_t B = batch_ids.size();
  if (cache.logits.size() != B || labels.size() != B)
    throw DataError("backward: cache/batch mismatch");

  std::vector<double> grads(model.param_count(), 0.0);
  const int d = cfg.embed_dim;
  const int F = cfg.filters_per_width;
  const int total = cfg.total_filters();
  const int C = cfg.num_classes;
  const double denom = static_cast<double>(B) * static_cast<double>(C);

  const double* Wout = model.output_w();
  double* gWout = grads.data() + model.output_w_offset();
  double* gbout = grads.data() + model.output_b_offset();
  double* gE = grads.data() + model.embedding_offset();

  std::vector<double> dlogit(static_cast<std::size_t>(C));
  std::vector<double> dz(static_cast<std::size_t>(total));
  for (std::size_t ex = 0; ex < B; ++ex) {
    for (int c = 0; c < C; ++c)
      dlogit[static_cast<std::size_t>(c)] =
          (sigmoid(cache.logits[ex][static_cast<std::size_t>(c)]) -
           labels[ex][static_cast<std::size_t>(c)]) /
          denom;

    // output layer
    for (int c = 0; c < C; ++c) gbout[c] += dlogit[static_cast<std::size_t>(c)];
    for (int f = 0; f < total; ++f) {
      const std::size_t wi = static_cast<std::size_t>(f / F);
      const int fl = f % F;
      const double zf = cache.pooled[ex][wi][static_cast<std::size_t>(fl)] *
                        cache.dropout_scale[ex][static_cast<std::size_t>(f)];
      double back = 0.0;
      for (int c = 0; c < C; ++c) {
        const std::size_t widx = static_cast<std::size_t>(f) *
                                     static_cast<std::size_t>(C) +
                                 static_cast<std::size_t>(c);
        gWout[widx] += zf * dlogit[static_cast<std::size_t>(c)];
        back += Wout[widx] * dlogit[static_cast<std::size_t>(c)];
      }
      dz[static_cast<std::size_t>(f)] =
          back * cache.dropout_scale[ex][static_cast<std::size_t>(f)];
    }

    // conv + pool: gradient routes to the argmax position when the pooled
    // activation is positive.
    const double* E = model.embedding();
    for (std::size_t wi = 0; wi < cfg.filter_widths.size(); ++wi) {
      const int w = cfg.filter_widths[wi];
      const double* W = model.filters(wi);
      double* gW = grads.data() + model.filters_offset(wi);
      double* gb = grads.data() + model.filter_bias_offset(wi);
      for (int fl = 0; fl < F; ++fl) {
        if (cache.pooled[ex][wi][static_cast<std::size_t>(fl)] <= 0.0)
          continue;
        const double dpre =
            dz[wi * static_cast<std::size_t>(F) + static_cast<std::size_t>(fl)];
        if (dpre == 0.0) continue;
        const int t0 = cache.argmax[ex][wi][static_cast<std::size_t>(fl)];
        gb[fl] += dpre;
        for (int i = 0; i < w; ++i) {
          const int token_id = batch_ids[ex][static_cast<std::size_t>(t0 + i)];
          const double* erow =
              E + static_cast<std::size_t>(token_id) *
                      static_cast<std::size_t>(d);
          double* gerow = gE + static_cast<std::size_t>(token_id) *
                                   static_cast<std::size_t>(d);
          for (int j = 0; j < d; ++j) {
            const std::size_t widx =
                (static_cast<std::size_t>(i) * static_cast<std::size_t>(d) +
                 static_cast<std::size_t>(j)) *
                    static_cast<std::size_t>(F) +
                static_cast<std::size_t>(fl);
            gW[widx] += erow[j] * dpre;
            gerow[j] += W[widx] * dpre;
          }
        }
      }
    }
  }
  return grads;
}

struct TrainResult {
  CnnModel model;
  std::vector<double> epoch_losses;  // mean batch loss per epoch
};

// Adam (or plain SGD) over the flat parameter vector. Fixed seed and batch
// order make the trajectory bit-reproducible.
inline TrainResult train(CnnModel model, const std::vector<Batch>& batches,
                         const CnnConfig& config) {
  config.validate();
  for (const auto& b : batches) {
    if (b.ids.size() != b.labels.size())
      throw DataError("train: ids/labels size mismatch");
    for (const auto& l : b.labels)
      if (static_cast<int>(l.size()) != config.num_classes)
        throw DataError("train: label vector has wrong length");
  }

  const bool adam = config.optimizer == "adam";
  std::vector<double> m(model.param_count(), 0.0);
  std::vector<double> v(model.param_count(), 0.0);
  constexpr double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;
  long long step = 0;

  std::mt19937_64 dropout_rng(config.seed ^ 0xD1B54A32D192ED03ull);
  TrainResult result{std::move(model), {}};

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    double epoch_loss = 0.0;
    for (const auto& batch : batches) {
      ForwardCache cache;
      auto logits = forward(result.model, batch.ids, RunMode::Train,
                            &dropout_rng, &cache);
      const double loss = noise_aware_loss(logits, batch.labels);
      if (!std::isfinite(loss))
        throw NumericError("train: non-finite loss at epoch " +
                           std::to_string(epoch + 1));
      epoch_loss += loss;
      auto grads = backward(result.model, cache, batch.ids, batch.labels);

      auto& params = result.model.params();
      ++step;
      if (adam) {
        const double bc1 = 1.0 - std::pow(beta1, static_cast<double>(step));
        const double bc2 = 1.0 - std::pow(beta2, static_cast<double>(step));
        for (std::size_t i = 0; i < params.size(); ++i) {
          m[i] = beta1 * m[i] + (1.0 - beta1) * grads[i];
          v[i] = beta2 * v[i] + (1.0 - beta2) * grads[i] * grads[i];
          params[i] -= config.learning_rate * (m[i] / bc1) /
                       (std::sqrt(v[i] / bc2) + eps);
        }
      } else {
        for (std::size_t i = 0; i < params.size(); ++i)
          params[i] -= config.learning_rate * grads[i];
      }

      if (config.l2_constraint > 0.0) {
        // max-norm constraint on each output-layer column
        double* W = result.model.params().data() +
                    result.model.output_w_offset();
        const int total = config.total_filters();
        for (int c = 0; c < config.num_classes; ++c) {
          double sq = 0.0;
          for (int f = 0; f < total; ++f) {
            const double x = W[static_cast<std::size_t>(f) *
                                   static_cast<std::size_t>(
                                       config.num_classes) +
                               static_cast<std::size_t>(c)];
            sq += x * x;
          }
          const double norm = std::sqrt(sq);
          if (norm > config.l2_constraint) {
            const double s = config.l2_constraint / norm;
            for (int f = 0; f < total; ++f)
              W[static_cast<std::size_t>(f) *
                    static_cast<std::size_t>(config.num_classes) +
                static_cast<std::size_t>(c)] *= s;
          }
        }
      }
    }
    result.epoch_losses.push_back(
        batches.empty() ? 0.0
                        : epoch_loss / static_cast<double>(batches.size()));
  }
  return result;
}

// Classes whose sigmoid(logit) clears the threshold (inclusive).
inline std::set<std::string> predict(const CnnModel& model,
                                     const std::vector<Token>& tokens,
                                     const Vocab& vocab,
                                     double threshold = 0.5) {
  const auto& cfg = model.config();
  if (cfg.num_classes != static_cast<int>(kNumClasses))
    throw DataError("predict: model does not use the 13-class label space");
  auto ids = encode_tokens(tokens, vocab, cfg.max_seq_len);
  auto logits = forward(model, {ids}, RunMode::Eval);
  std::set<std::string> out;
  for (std::size_t c = 0; c < kNumClasses; ++c)
    if (sigmoid(logits[0][c]) >= threshold)
      out.insert(std::string(kClassNames[c]));
  return out;
}

// --- checkpoint: one-line JSON header + little-endian float32 arrays ---

inline constexpr int kCheckpointVersion = 1;

inline void save_checkpoint(const std::string& path, const CnnModel& model,
                            const std::string& vocab_hash,
                            const std::string& config_hash,
                            std::uint64_t seed) {
  const auto& cfg = model.config();
  nlohmann::json arrays = nlohmann::json::array();
  arrays.push_back({{"name", "embedding"},
                    {"shape", {cfg.vocab_size, cfg.embed_dim}}});
  for (std::size_t wi = 0; wi < cfg.filter_widths.size(); ++wi) {
    arrays.push_back(
        {{"name", "filters_w" + std::to_string(cfg.filter_widths[wi])},
         {"shape",
          {cfg.filter_widths[wi], cfg.embed_dim, cfg.filters_per_width}}});
    arrays.push_back(
        {{"name", "bias_w" + std::to_string(cfg.filter_widths[wi])},
         {"shape", {cfg.filters_per_width}}});
  }
  arrays.push_back({{"name", "output_weights"},
                    {"shape", {cfg.total_filters(), cfg.num_classes}}});
  arrays.push_back({{"name", "output_bias"}, {"shape", {cfg.num_classes}}});

  nlohmann::json header{{"format_version", kCheckpointVersion},
                        {"config", cfg},
                        {"vocab_hash", vocab_hash},
                        {"config_hash", config_hash},
                        {"seed", seed},
                        {"arrays", std::move(arrays)}};

  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write checkpoint: " + path);
  out << header.dump() << '\n';
  std::vector<float> buf(model.params().size());
  for (std::size_t i = 0; i < buf.size(); ++i)
    buf[i] = static_cast<float>(model.params()[i]);
  out.write(reinterpret_cast<const char*>(buf.data()),
            static_cast<std::streamsize>(buf.size() * sizeof(float)));
  if (!out) throw DataError("failed writing checkpoint: " + path);
}

struct Checkpoint {
  CnnModel model;
  nlohmann::json header;
};

inline Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open checkpoint: " + path);
  std::string header_line;
  if (!std::getline(in, header_line))
    throw DataError("checkpoint missing header: " + path);
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(header_line);
  } catch (const nlohmann::json::exception& e) {
    throw DataError("bad checkpoint header: " + std::string(e.what()));
  }
  if (header.value("format_version", -1) != kCheckpointVersion)
    throw DataError("checkpoint version mismatch in " + path);

  CnnConfig cfg = header.at("config").get<CnnConfig>();
  CnnModel model(cfg);
  std::vector<float> buf(model.param_count());
  in.read(reinterpret_cast<char*>(buf.data()),
          static_cast<std::streamsize>(buf.size() * sizeof(float)));
  if (in.gcount() !=
      static_cast<std::streamsize>(buf.size() * sizeof(float)))
    throw DataError("checkpoint truncated: " + path);
  for (std::size_t i = 0; i < buf.size(); ++i)
    model.params()[i] = static_cast<double>(buf[i]);
  return {std::move(model), std::move(header)};
}

}  // namespace fashmine
