// Copyright 2026 The pitchdict Authors.
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

#include "pitchdict/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "pitchdict/error.hpp"

namespace pitchdict {

void ModelConfig::validate() const {
  if (channels < 1) throw std::invalid_argument("channels must be positive");
  if (kernel < 1 || kernel % 2 == 0) throw std::invalid_argument("kernel must be odd");
  if (dilations.empty()) throw std::invalid_argument("at least one layer is required");
  for (int d : dilations) {
    if (d < 1) throw std::invalid_argument("dilation must be positive");
  }
  if (dropout < 0.0 || dropout >= 1.0) throw std::invalid_argument("dropout must be in [0, 1)");
  if (target_gold <= 0.0 || target_gold >= 1.0) {
    throw std::invalid_argument("target_gold must be in (0, 1)");
  }
  if (renorm_warmup < 0 || renorm_r_max < 1.0 || renorm_d_max < 0.0) {
    throw std::invalid_argument("bad renormalization schedule");
  }
}

template <typename T>
std::size_t TensorSet<T>::find(const std::string& name) const {
  for (std::size_t i = 0; i < tensors.size(); ++i) {
    if (tensors[i].name == name) return i;
  }
  throw std::out_of_range("no tensor named " + name);
}

template <typename T>
TensorSet<T> TensorSet<T>::zeros_like() const {
  TensorSet<T> out = *this;
  out.fill(T(0));
  return out;
}

template <typename T>
void TensorSet<T>::fill(T value) {
  for (auto& t : tensors) std::fill(t.data.begin(), t.data.end(), value);
}

template struct TensorSet<float>;
template struct TensorSet<double>;

std::vector<std::vector<double>> guide_weights(std::size_t n, std::size_t t, double g) {
  std::vector<std::vector<double>> w(n, std::vector<double>(t));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      const double diff = static_cast<double>(i) / n - static_cast<double>(j) / t;
      w[i][j] = 1.0 - std::exp(-diff * diff / (2.0 * g * g));
    }
  }
  return w;
}

namespace {

std::array<double, 3> smoothed_target(Accent gold, double p_gold) {
  std::array<double, 3> q;
  q.fill((1.0 - p_gold) / 2.0);
  q[label_index(gold)] = p_gold;
  return q;
}

template <typename T>
void log_softmax3(const T* z, T* out) {
  const T mx = std::max({z[0], z[1], z[2]});
  const T lse = mx + std::log(std::exp(z[0] - mx) + std::exp(z[1] - mx) + std::exp(z[2] - mx));
  for (int c = 0; c < 3; ++c) out[c] = z[c] - lse;
}

}  // namespace

LossParts word_loss(const WordOutput& out, const AccentVector& gold, const ModelConfig& cfg) {
  const std::size_t n = out.logits.size();
  if (gold.size() != n) throw std::invalid_argument("gold length does not match the logits");
  if (n == 0) throw std::invalid_argument("empty sequence");
  LossParts parts;
  for (std::size_t i = 0; i < n; ++i) {
    double lp[3];
    log_softmax3(out.logits[i].data(), lp);
    const auto q = smoothed_target(gold[i], cfg.target_gold);
    for (int c = 0; c < 3; ++c) parts.cross_entropy -= q[c] * lp[c];
  }
  parts.cross_entropy /= static_cast<double>(n);
  if (out.attention.size() == n && n > 0 && !out.attention[0].empty()) {
    const std::size_t t = out.attention[0].size();
    const auto w = guide_weights(n, t, cfg.guide_width);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < t; ++j) parts.attention += out.attention[i][j] * w[i][j];
    }
    parts.attention /= static_cast<double>(n * t);
  }
  parts.total = parts.cross_entropy + cfg.guide_weight * parts.attention;
  return parts;
}

// ---------------------------------------------------------------------------
// Network

namespace {

constexpr const char* kStacks[3] = {"s", "y", "a"};

struct Layout {
  std::size_t s_emb[6];
  std::size_t s_bias;
  std::size_t y_emb[2];
  std::size_t y_bias;
  std::vector<std::size_t> conv[3], gamma[3], beta[3];
  std::vector<std::size_t> mean[3], var[3];  // into stats
  std::size_t in_w, in_b, h1_w, h1_b, h2_w, h2_b;
};

template <typename T>
std::size_t add(TensorSet<T>& set, std::string name, std::vector<int> shape) {
  std::size_t n = 1;
  for (int d : shape) n *= static_cast<std::size_t>(d);
  set.tensors.push_back({std::move(name), std::move(shape), std::vector<T>(n, T(0))});
  return set.tensors.size() - 1;
}

template <typename T>
Layout build_layout(const ModelConfig& cfg, TensorSet<T>* params, TensorSet<T>* stats) {
  TensorSet<T> p_dummy, s_dummy;
  TensorSet<T>& p = params ? *params : p_dummy;
  TensorSet<T>& s = stats ? *stats : s_dummy;
  p.tensors.clear();
  s.tensors.clear();
  const int c = cfg.channels;
  Layout l;
  const int s_vocab[6] = {kConsonantVocab, kVowelVocab, kPosVocab,
                          kGoshuVocab,     kAccentVocab, kSandhiVocab};
  const char* s_names[6] = {"consonant", "vowel", "pos", "goshu", "accent", "sandhi"};
  for (int f = 0; f < 6; ++f) {
    l.s_emb[f] = add(p, std::string("s.emb.") + s_names[f], {s_vocab[f], c});
  }
  l.s_bias = add(p, "s.emb.bias", {c});
  l.y_emb[0] = add(p, "y.emb.consonant", {kConsonantVocab, c});
  l.y_emb[1] = add(p, "y.emb.vowel", {kVowelVocab, c});
  l.y_bias = add(p, "y.emb.bias", {c});
  for (int st = 0; st < 3; ++st) {
    if (st == 2) {
      l.in_w = add(p, "a.in.weight", {2 * c, c});
      l.in_b = add(p, "a.in.bias", {c});
    }
    for (std::size_t i = 0; i < cfg.dilations.size(); ++i) {
      const std::string pre = std::string(kStacks[st]) + "." + std::to_string(i) + ".";
      l.conv[st].push_back(add(p, pre + "conv", {cfg.kernel, c, 2 * c}));
      l.gamma[st].push_back(add(p, pre + "gamma", {2 * c}));
      l.beta[st].push_back(add(p, pre + "beta", {2 * c}));
      l.mean[st].push_back(add(s, pre + "mean", {2 * c}));
      l.var[st].push_back(add(s, pre + "var", {2 * c}));
    }
  }
  l.h1_w = add(p, "head.1.weight", {c, c});
  l.h1_b = add(p, "head.1.bias", {c});
  l.h2_w = add(p, "head.2.weight", {c, 3});
  l.h2_b = add(p, "head.2.bias", {3});
  return l;
}

template <typename T>
Layout layout_of(const ModelConfig& cfg) {
  return build_layout<T>(cfg, nullptr, nullptr);
}

// out[p][n] = in[p][:] . w[:][n] + b[n]
template <typename T>
void dense_forward(const T* in, std::size_t rows, int m, int n, const T* w, const T* b, T* out) {
  for (std::size_t p = 0; p < rows; ++p) {
    T* o = out + p * n;
    for (int j = 0; j < n; ++j) o[j] = b ? b[j] : T(0);
    const T* x = in + p * m;
    for (int i = 0; i < m; ++i) {
      const T a = x[i];
      if (a == T(0)) continue;
      const T* wr = w + static_cast<std::size_t>(i) * n;
      for (int j = 0; j < n; ++j) o[j] += a * wr[j];
    }
  }
}

template <typename T>
std::vector<T> transpose(const T* w, int m, int n) {
  std::vector<T> t(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(j) * m + i] = w[static_cast<std::size_t>(i) * n + j];
  }
  return t;
}

// Accumulates dw, db and (when din is non-null) din.
template <typename T>
void dense_backward(const T* in, const T* dout, std::size_t rows, int m, int n, const T* w,
                    T* dw, T* db, T* din) {
  const std::vector<T> wt = din ? transpose(w, m, n) : std::vector<T>{};
  for (std::size_t p = 0; p < rows; ++p) {
    const T* g = dout + p * n;
    const T* x = in + p * m;
    if (db) {
      for (int j = 0; j < n; ++j) db[j] += g[j];
    }
    for (int i = 0; i < m; ++i) {
      const T a = x[i];
      if (a == T(0)) continue;
      T* dwr = dw + static_cast<std::size_t>(i) * n;
      for (int j = 0; j < n; ++j) dwr[j] += a * g[j];
    }
    if (din) {
      T* dx = din + p * m;
      for (int j = 0; j < n; ++j) {
        const T gj = g[j];
        if (gj == T(0)) continue;
        const T* wr = wt.data() + static_cast<std::size_t>(j) * m;
        for (int i = 0; i < m; ++i) dx[i] += gj * wr[i];
      }
    }
  }
}

struct Segments {
  std::vector<std::size_t> off;  // size words + 1
  std::size_t total() const { return off.back(); }
  std::size_t words() const { return off.size() - 1; }
  std::size_t len(std::size_t b) const { return off[b + 1] - off[b]; }
};

template <typename T>
struct LayerCache {
  std::vector<T> x;      // layer input
  std::vector<T> mask;   // dropout multipliers, empty when not training
  std::vector<T> xd;     // dropped input fed to the convolution
  std::vector<T> xhat0;  // (h - mu) / sigma
  std::vector<T> gate;   // sigmoid of the gate half
  std::vector<T> value;
  std::vector<T> sigma, r, d;  // per output channel
};

template <typename T>
struct Ctx {
  const ModelConfig& cfg;
  const Layout& lay;
  const TensorSet<T>& params;
  TensorSet<T>* stats;  // moving statistics; updated when update_stats
  bool training;
  bool update_stats;
  double r_max, d_max;
  Rng* rng;
};

template <typename T>
void conv_forward(const T* x, const Segments& seg, int cin, int cout, int kernel, int dil,
                  const T* w, T* h) {
  std::fill(h, h + seg.total() * cout, T(0));
  const int half = kernel / 2;
  for (std::size_t b = 0; b < seg.words(); ++b) {
    const std::ptrdiff_t lo = static_cast<std::ptrdiff_t>(seg.off[b]);
    const std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(seg.off[b + 1]);
    for (std::ptrdiff_t p = lo; p < hi; ++p) {
      T* hr = h + p * cout;
      for (int k = 0; k < kernel; ++k) {
        const std::ptrdiff_t src = p + static_cast<std::ptrdiff_t>(k - half) * dil;
        if (src < lo || src >= hi) continue;
        const T* xr = x + src * cin;
        const T* wk = w + static_cast<std::size_t>(k) * cin * cout;
        for (int i = 0; i < cin; ++i) {
          const T a = xr[i];
          if (a == T(0)) continue;
          const T* wr = wk + static_cast<std::size_t>(i) * cout;
          for (int o = 0; o < cout; ++o) hr[o] += a * wr[o];
        }
      }
    }
  }
}

template <typename T>
void conv_backward(const T* xd, const T* dh, const Segments& seg, int cin, int cout, int kernel,
                   int dil, const T* w, T* dw, T* dxd) {
  const int half = kernel / 2;
  std::vector<std::vector<T>> wt(kernel);
  for (int k = 0; k < kernel; ++k) wt[k] = transpose(w + static_cast<std::size_t>(k) * cin * cout, cin, cout);
  for (std::size_t b = 0; b < seg.words(); ++b) {
    const std::ptrdiff_t lo = static_cast<std::ptrdiff_t>(seg.off[b]);
    const std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(seg.off[b + 1]);
    for (std::ptrdiff_t p = lo; p < hi; ++p) {
      const T* g = dh + p * cout;
      for (int k = 0; k < kernel; ++k) {
        const std::ptrdiff_t src = p + static_cast<std::ptrdiff_t>(k - half) * dil;
        if (src < lo || src >= hi) continue;
        const T* xr = xd + src * cin;
        T* dwk = dw + static_cast<std::size_t>(k) * cin * cout;
        for (int i = 0; i < cin; ++i) {
          const T a = xr[i];
          if (a == T(0)) continue;
          T* dwr = dwk + static_cast<std::size_t>(i) * cout;
          for (int o = 0; o < cout; ++o) dwr[o] += a * g[o];
        }
        T* dx = dxd + src * cin;
        const T* wtk = wt[k].data();
        for (int o = 0; o < cout; ++o) {
          const T go = g[o];
          if (go == T(0)) continue;
          const T* wr = wtk + static_cast<std::size_t>(o) * cin;
          for (int i = 0; i < cin; ++i) dx[i] += go * wr[i];
        }
      }
    }
  }
}

// One highway layer: dropout -> dilated conv -> batch renorm -> gated mix
// with the undropped input. `x` is replaced by the layer output.
template <typename T>
void highway_forward(Ctx<T>& ctx, int stack, std::size_t layer, const Segments& seg,
                     std::vector<T>& x, LayerCache<T>* cache) {
  const int c = ctx.cfg.channels;
  const int c2 = 2 * c;
  const std::size_t rows = seg.total();
  const auto& lay = ctx.lay;
  const T* w = ctx.params[lay.conv[stack][layer]].data.data();
  const T* gamma = ctx.params[lay.gamma[stack][layer]].data.data();
  const T* beta = ctx.params[lay.beta[stack][layer]].data.data();
  T* mm = ctx.stats ? (*ctx.stats)[lay.mean[stack][layer]].data.data() : nullptr;
  T* mv = ctx.stats ? (*ctx.stats)[lay.var[stack][layer]].data.data() : nullptr;
  const T eps = static_cast<T>(ctx.cfg.renorm_eps);

  std::vector<T> mask;
  std::vector<T> xd = x;
  if (ctx.training && ctx.cfg.dropout > 0.0) {
    mask.resize(x.size());
    const T keep = static_cast<T>(1.0 / (1.0 - ctx.cfg.dropout));
    for (std::size_t i = 0; i < x.size(); ++i) {
      mask[i] = ctx.rng->uniform() < ctx.cfg.dropout ? T(0) : keep;
      xd[i] = x[i] * mask[i];
    }
  }

  std::vector<T> h(rows * c2);
  conv_forward(xd.data(), seg, c, c2, ctx.cfg.kernel, ctx.cfg.dilations[layer], w, h.data());

  std::vector<T> sigma(c2), r(c2, T(1)), d(c2, T(0)), mu(c2, T(0));
  if (ctx.training) {
    std::vector<T> var(c2, T(0));
    for (std::size_t p = 0; p < rows; ++p) {
      for (int j = 0; j < c2; ++j) mu[j] += h[p * c2 + j];
    }
    for (int j = 0; j < c2; ++j) mu[j] /= static_cast<T>(rows);
    for (std::size_t p = 0; p < rows; ++p) {
      for (int j = 0; j < c2; ++j) {
        const T z = h[p * c2 + j] - mu[j];
        var[j] += z * z;
      }
    }
    for (int j = 0; j < c2; ++j) {
      var[j] /= static_cast<T>(rows);
      sigma[j] = std::sqrt(var[j] + eps);
      const T sigma_mov = std::sqrt(mv[j] + eps);
      r[j] = std::clamp(sigma[j] / sigma_mov, static_cast<T>(1.0 / ctx.r_max),
                        static_cast<T>(ctx.r_max));
      d[j] = std::clamp((mu[j] - mm[j]) / sigma_mov, static_cast<T>(-ctx.d_max),
                        static_cast<T>(ctx.d_max));
    }
    if (ctx.update_stats) {
      const T a = static_cast<T>(1.0 - ctx.cfg.renorm_momentum);
      const T unbias = rows > 1 ? static_cast<T>(rows) / static_cast<T>(rows - 1) : T(1);
      for (int j = 0; j < c2; ++j) {
        mm[j] += a * (mu[j] - mm[j]);
        mv[j] += a * (var[j] * unbias - mv[j]);
      }
    }
  } else {
    for (int j = 0; j < c2; ++j) {
      mu[j] = mm[j];
      sigma[j] = std::sqrt(mv[j] + eps);
    }
  }

  std::vector<T> xhat0(rows * c2);
  std::vector<T> gate(rows * c), value(rows * c);
  for (std::size_t p = 0; p < rows; ++p) {
    for (int j = 0; j < c2; ++j) {
      const T z = (h[p * c2 + j] - mu[j]) / sigma[j];
      xhat0[p * c2 + j] = z;
      const T y = gamma[j] * (z * r[j] + d[j]) + beta[j];
      if (j < c) {
        value[p * c + j] = y;
      } else {
        gate[p * c + j - c] = T(1) / (T(1) + std::exp(-y));
      }
    }
  }
  std::vector<T> out(rows * c);
  for (std::size_t i = 0; i < rows * c; ++i) out[i] = gate[i] * value[i] + (T(1) - gate[i]) * x[i];

  if (cache) {
    cache->x = std::move(x);
    cache->mask = std::move(mask);
    cache->xd = std::move(xd);
    cache->xhat0 = std::move(xhat0);
    cache->gate = std::move(gate);
    cache->value = std::move(value);
    cache->sigma = std::move(sigma);
    cache->r = std::move(r);
    cache->d = std::move(d);
  }
  x = std::move(out);
}

// `dx` holds d(loss)/d(output) on entry and d(loss)/d(input) on exit.
template <typename T>
void highway_backward(const Ctx<T>& ctx, int stack, std::size_t layer, const Segments& seg,
                      const LayerCache<T>& cache, std::vector<T>& dx, TensorSet<T>& grad) {
  const int c = ctx.cfg.channels;
  const int c2 = 2 * c;
  const std::size_t rows = seg.total();
  const auto& lay = ctx.lay;
  const T* w = ctx.params[lay.conv[stack][layer]].data.data();
  const T* gamma = ctx.params[lay.gamma[stack][layer]].data.data();
  T* dw = grad[lay.conv[stack][layer]].data.data();
  T* dgamma = grad[lay.gamma[stack][layer]].data.data();
  T* dbeta = grad[lay.beta[stack][layer]].data.data();

  std::vector<T> dy(rows * c2);
  std::vector<T> dres(rows * c);
  for (std::size_t p = 0; p < rows; ++p) {
    for (int j = 0; j < c; ++j) {
      const std::size_t i = p * c + j;
      const T g = dx[i];
      const T s = cache.gate[i];
      dy[p * c2 + j] = g * s;
      dy[p * c2 + c + j] = g * (cache.value[i] - cache.x[i]) * s * (T(1) - s);
      dres[i] = g * (T(1) - s);
    }
  }
  // Renorm backward with r and d held constant.
  std::vector<T> mean_g(c2, T(0)), mean_gx(c2, T(0));
  std::vector<T> gx0(rows * c2);
  for (std::size_t p = 0; p < rows; ++p) {
    for (int j = 0; j < c2; ++j) {
      const std::size_t i = p * c2 + j;
      const T z = cache.xhat0[i];
      dgamma[j] += dy[i] * (z * cache.r[j] + cache.d[j]);
      dbeta[j] += dy[i];
      gx0[i] = dy[i] * gamma[j] * cache.r[j];
      mean_g[j] += gx0[i];
      mean_gx[j] += gx0[i] * z;
    }
  }
  for (int j = 0; j < c2; ++j) {
    mean_g[j] /= static_cast<T>(rows);
    mean_gx[j] /= static_cast<T>(rows);
  }
  std::vector<T> dh(rows * c2);
  for (std::size_t p = 0; p < rows; ++p) {
    for (int j = 0; j < c2; ++j) {
      const std::size_t i = p * c2 + j;
      dh[i] = (gx0[i] - mean_g[j] - cache.xhat0[i] * mean_gx[j]) / cache.sigma[j];
    }
  }
  std::vector<T> dxd(rows * c, T(0));
  conv_backward(cache.xd.data(), dh.data(), seg, c, c2, ctx.cfg.kernel, ctx.cfg.dilations[layer],
                w, dw, dxd.data());
  for (std::size_t i = 0; i < rows * c; ++i) {
    const T m = cache.mask.empty() ? T(1) : cache.mask[i];
    dx[i] = dres[i] + dxd[i] * m;
  }
}

template <typename T>
void embed_surface(const Ctx<T>& ctx, const std::vector<const FeaturePair*>& batch,
                   std::vector<T>& x) {
  const int c = ctx.cfg.channels;
  const T* bias = ctx.params[ctx.lay.s_bias].data.data();
  std::size_t p = 0;
  for (const FeaturePair* fp : batch) {
    for (const auto& f : fp->surface_side) {
      const int ids[6] = {f.consonant, f.vowel, f.pos, f.goshu, f.accent, f.sandhi};
      T* row = x.data() + p * c;
      for (int j = 0; j < c; ++j) row[j] = bias[j];
      for (int k = 0; k < 6; ++k) {
        const T* e = ctx.params[ctx.lay.s_emb[k]].data.data() + static_cast<std::size_t>(ids[k]) * c;
        for (int j = 0; j < c; ++j) row[j] += e[j];
      }
      ++p;
    }
  }
}

template <typename T>
void embed_yomi(const Ctx<T>& ctx, const std::vector<const FeaturePair*>& batch,
                std::vector<T>& x) {
  const int c = ctx.cfg.channels;
  const T* bias = ctx.params[ctx.lay.y_bias].data.data();
  std::size_t p = 0;
  for (const FeaturePair* fp : batch) {
    for (const auto& f : fp->yomi_side) {
      const int ids[2] = {f.consonant, f.vowel};
      T* row = x.data() + p * c;
      for (int j = 0; j < c; ++j) row[j] = bias[j];
      for (int k = 0; k < 2; ++k) {
        const T* e = ctx.params[ctx.lay.y_emb[k]].data.data() + static_cast<std::size_t>(ids[k]) * c;
        for (int j = 0; j < c; ++j) row[j] += e[j];
      }
      ++p;
    }
  }
}

void check_ids(const FeaturePair& fp) {
  if (fp.surface_side.empty() || fp.yomi_side.empty()) {
    throw std::invalid_argument("empty sequence");
  }
  for (const auto& f : fp.surface_side) {
    if (f.consonant >= kConsonantVocab || f.vowel >= kVowelVocab || f.pos >= kPosVocab ||
        f.goshu >= kGoshuVocab || f.accent >= kAccentVocab || f.sandhi >= kSandhiVocab) {
      throw std::invalid_argument("surface feature id out of range");
    }
  }
  for (const auto& f : fp.yomi_side) {
    if (f.consonant >= kConsonantVocab || f.vowel >= kVowelVocab) {
      throw std::invalid_argument("yomi feature id out of range");
    }
  }
}

// Full forward (and optionally backward) pass over a packed batch.
template <typename T>
double run(Ctx<T>& ctx, const std::vector<const FeaturePair*>& batch,
           const std::vector<const AccentVector*>* gold, TensorSet<T>* grad,
           std::vector<WordOutput>* outputs) {
  const ModelConfig& cfg = ctx.cfg;
  const Layout& lay = ctx.lay;
  const int c = cfg.channels;
  const std::size_t nb = batch.size();
  const std::size_t layers = cfg.dilations.size();
  if (nb == 0) throw std::invalid_argument("empty batch");

  Segments sseg, yseg;
  sseg.off.push_back(0);
  yseg.off.push_back(0);
  for (std::size_t b = 0; b < nb; ++b) {
    check_ids(*batch[b]);
    if (gold && (*gold)[b]->size() != batch[b]->yomi_side.size()) {
      throw std::invalid_argument("gold length does not match the yomi");
    }
    sseg.off.push_back(sseg.off.back() + batch[b]->surface_side.size());
    yseg.off.push_back(yseg.off.back() + batch[b]->yomi_side.size());
  }
  const std::size_t ps = sseg.total();
  const std::size_t py = yseg.total();
  const bool backward = grad != nullptr;

  // Encoders.
  std::vector<T> ks(ps * c), qy(py * c);
  embed_surface(ctx, batch, ks);
  embed_yomi(ctx, batch, qy);
  std::vector<LayerCache<T>> cache_s(backward ? layers : 0), cache_y(backward ? layers : 0),
      cache_a(backward ? layers : 0);
  for (std::size_t l = 0; l < layers; ++l) {
    highway_forward(ctx, 0, l, sseg, ks, backward ? &cache_s[l] : nullptr);
  }
  for (std::size_t l = 0; l < layers; ++l) {
    highway_forward(ctx, 1, l, yseg, qy, backward ? &cache_y[l] : nullptr);
  }

  // Attention, word by word.
  const T scale = T(1) / std::sqrt(static_cast<T>(c));
  std::vector<std::vector<T>> att(nb);
  std::vector<T> dec_in(py * 2 * c);
  for (std::size_t b = 0; b < nb; ++b) {
    const std::size_t ny = yseg.len(b), ns = sseg.len(b);
    const T* q = qy.data() + yseg.off[b] * c;
    const T* k = ks.data() + sseg.off[b] * c;
    auto& a = att[b];
    a.assign(ny * ns, T(0));
    for (std::size_t n = 0; n < ny; ++n) {
      T mx = -std::numeric_limits<T>::infinity();
      for (std::size_t t = 0; t < ns; ++t) {
        T sdot = 0;
        for (int j = 0; j < c; ++j) sdot += q[n * c + j] * k[t * c + j];
        a[n * ns + t] = sdot * scale;
        mx = std::max(mx, a[n * ns + t]);
      }
      T z = 0;
      for (std::size_t t = 0; t < ns; ++t) {
        a[n * ns + t] = std::exp(a[n * ns + t] - mx);
        z += a[n * ns + t];
      }
      for (std::size_t t = 0; t < ns; ++t) a[n * ns + t] /= z;
      T* row = dec_in.data() + (yseg.off[b] + n) * 2 * c;
      for (int j = 0; j < c; ++j) row[j] = T(0);
      for (std::size_t t = 0; t < ns; ++t) {
        const T w = a[n * ns + t];
        for (int j = 0; j < c; ++j) row[j] += w * k[t * c + j];
      }
      for (int j = 0; j < c; ++j) row[c + j] = q[n * c + j];
    }
  }

  // Decoder.
  std::vector<T> z(py * c);
  dense_forward(dec_in.data(), py, 2 * c, c, ctx.params[lay.in_w].data.data(),
                ctx.params[lay.in_b].data.data(), z.data());
  for (std::size_t l = 0; l < layers; ++l) {
    highway_forward(ctx, 2, l, yseg, z, backward ? &cache_a[l] : nullptr);
  }
  std::vector<T> u(py * c), logits(py * 3);
  dense_forward(z.data(), py, c, c, ctx.params[lay.h1_w].data.data(),
                ctx.params[lay.h1_b].data.data(), u.data());
  for (auto& v : u) v = std::max(v, T(0));
  dense_forward(u.data(), py, c, 3, ctx.params[lay.h2_w].data.data(),
                ctx.params[lay.h2_b].data.data(), logits.data());

  if (outputs) {
    outputs->assign(nb, {});
    for (std::size_t b = 0; b < nb; ++b) {
      const std::size_t ny = yseg.len(b), ns = sseg.len(b);
      auto& o = (*outputs)[b];
      o.logits.resize(ny);
      o.attention.assign(ny, std::vector<double>(ns));
      for (std::size_t n = 0; n < ny; ++n) {
        for (int j = 0; j < 3; ++j) o.logits[n][j] = logits[(yseg.off[b] + n) * 3 + j];
        for (std::size_t t = 0; t < ns; ++t) o.attention[n][t] = att[b][n * ns + t];
      }
    }
  }
  if (!gold) return 0.0;

  // Loss and its gradient with respect to logits and attention.
  double loss = 0.0;
  const T inv_b = T(1) / static_cast<T>(nb);
  std::vector<T> dlogits(py * 3);
  std::vector<std::vector<T>> datt(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    const std::size_t ny = yseg.len(b), ns = sseg.len(b);
    double ce = 0.0, at = 0.0;
    for (std::size_t n = 0; n < ny; ++n) {
      const std::size_t p = yseg.off[b] + n;
      T lp[3];
      log_softmax3(logits.data() + p * 3, lp);
      const auto q = smoothed_target((*gold)[b]->at(n), cfg.target_gold);
      for (int j = 0; j < 3; ++j) {
        ce -= q[j] * static_cast<double>(lp[j]);
        dlogits[p * 3 + j] = (std::exp(lp[j]) - static_cast<T>(q[j])) * inv_b / static_cast<T>(ny);
      }
    }
    const auto w = guide_weights(ny, ns, cfg.guide_width);
    datt[b].resize(ny * ns);
    const T datt_scale = static_cast<T>(cfg.guide_weight) * inv_b / static_cast<T>(ny * ns);
    for (std::size_t n = 0; n < ny; ++n) {
      for (std::size_t t = 0; t < ns; ++t) {
        at += static_cast<double>(att[b][n * ns + t]) * w[n][t];
        datt[b][n * ns + t] = static_cast<T>(w[n][t]) * datt_scale;
      }
    }
    loss += ce / ny + cfg.guide_weight * at / (ny * ns);
  }
  loss /= static_cast<double>(nb);
  if (!backward) return loss;

  TensorSet<T>& g = *grad;
  // Head.
  std::vector<T> du(py * c, T(0));
  dense_backward(u.data(), dlogits.data(), py, c, 3, ctx.params[lay.h2_w].data.data(),
                 g[lay.h2_w].data.data(), g[lay.h2_b].data.data(), du.data());
  for (std::size_t i = 0; i < du.size(); ++i) {
    if (u[i] <= T(0)) du[i] = T(0);
  }
  std::vector<T> dz(py * c, T(0));
  dense_backward(z.data(), du.data(), py, c, c, ctx.params[lay.h1_w].data.data(),
                 g[lay.h1_w].data.data(), g[lay.h1_b].data.data(), dz.data());
  for (std::size_t l = layers; l-- > 0;) highway_backward(ctx, 2, l, yseg, cache_a[l], dz, g);
  std::vector<T> ddec(py * 2 * c, T(0));
  dense_backward(dec_in.data(), dz.data(), py, 2 * c, c, ctx.params[lay.in_w].data.data(),
                 g[lay.in_w].data.data(), g[lay.in_b].data.data(), ddec.data());

  // Attention backward.
  std::vector<T> dq(py * c, T(0)), dk(ps * c, T(0));
  for (std::size_t b = 0; b < nb; ++b) {
    const std::size_t ny = yseg.len(b), ns = sseg.len(b);
    const T* q = qy.data() + yseg.off[b] * c;
    const T* k = ks.data() + sseg.off[b] * c;
    T* dqb = dq.data() + yseg.off[b] * c;
    T* dkb = dk.data() + sseg.off[b] * c;
    const auto& a = att[b];
    std::vector<T> da = datt[b];
    for (std::size_t n = 0; n < ny; ++n) {
      const T* dctx = ddec.data() + (yseg.off[b] + n) * 2 * c;
      for (int j = 0; j < c; ++j) dqb[n * c + j] += dctx[c + j];
      for (std::size_t t = 0; t < ns; ++t) {
        T s = 0;
        for (int j = 0; j < c; ++j) {
          s += dctx[j] * k[t * c + j];
          dkb[t * c + j] += a[n * ns + t] * dctx[j];
        }
        da[n * ns + t] += s;
      }
      T dot = 0;
      for (std::size_t t = 0; t < ns; ++t) dot += da[n * ns + t] * a[n * ns + t];
      for (std::size_t t = 0; t < ns; ++t) {
        const T ds = a[n * ns + t] * (da[n * ns + t] - dot) * scale;
        if (ds == T(0)) continue;
        for (int j = 0; j < c; ++j) {
          dqb[n * c + j] += ds * k[t * c + j];
          dkb[t * c + j] += ds * q[n * c + j];
        }
      }
    }
  }

  for (std::size_t l = layers; l-- > 0;) highway_backward(ctx, 1, l, yseg, cache_y[l], dq, g);
  for (std::size_t l = layers; l-- > 0;) highway_backward(ctx, 0, l, sseg, cache_s[l], dk, g);

  // Embeddings.
  {
    std::size_t p = 0;
    T* dbias = g[lay.s_bias].data.data();
    for (const FeaturePair* fp : batch) {
      for (const auto& f : fp->surface_side) {
        const int ids[6] = {f.consonant, f.vowel, f.pos, f.goshu, f.accent, f.sandhi};
        const T* row = dk.data() + p * c;
        for (int j = 0; j < c; ++j) dbias[j] += row[j];
        for (int e = 0; e < 6; ++e) {
          T* de = g[lay.s_emb[e]].data.data() + static_cast<std::size_t>(ids[e]) * c;
          for (int j = 0; j < c; ++j) de[j] += row[j];
        }
        ++p;
      }
    }
  }
  {
    std::size_t p = 0;
    T* dbias = g[lay.y_bias].data.data();
    for (const FeaturePair* fp : batch) {
      for (const auto& f : fp->yomi_side) {
        const int ids[2] = {f.consonant, f.vowel};
        const T* row = dq.data() + p * c;
        for (int j = 0; j < c; ++j) dbias[j] += row[j];
        for (int e = 0; e < 2; ++e) {
          T* de = g[lay.y_emb[e]].data.data() + static_cast<std::size_t>(ids[e]) * c;
          for (int j = 0; j < c; ++j) de[j] += row[j];
        }
        ++p;
      }
    }
  }
  return loss;
}

}  // namespace

template <typename T>
Network<T>::Network(ModelConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
  build_layout<T>(cfg_, &params_, &stats_);
  for (std::size_t i = 0; i < stats_.size(); ++i) {
    const bool is_var = stats_[i].name.size() > 4 &&
                        stats_[i].name.compare(stats_[i].name.size() - 4, 4, ".var") == 0;
    std::fill(stats_[i].data.begin(), stats_[i].data.end(), is_var ? T(1) : T(0));
  }
}

template <typename T>
void Network<T>::init(Rng& rng) {
  const Layout lay = layout_of<T>(cfg_);
  const double c = cfg_.channels;
  auto fill_normal = [&](std::size_t idx, double stddev) {
    for (auto& v : params_[idx].data) v = static_cast<T>(rng.normal() * stddev);
  };
  for (std::size_t f = 0; f < 6; ++f) fill_normal(lay.s_emb[f], 1.0 / std::sqrt(6.0));
  for (std::size_t f = 0; f < 2; ++f) fill_normal(lay.y_emb[f], 1.0 / std::sqrt(2.0));
  for (int st = 0; st < 3; ++st) {
    for (std::size_t l = 0; l < cfg_.dilations.size(); ++l) {
      fill_normal(lay.conv[st][l], 1.0 / std::sqrt(cfg_.kernel * c));
      auto& gamma = params_[lay.gamma[st][l]].data;
      auto& beta = params_[lay.beta[st][l]].data;
      std::fill(gamma.begin(), gamma.end(), T(1));
      for (std::size_t j = 0; j < beta.size(); ++j) {
        beta[j] = j < static_cast<std::size_t>(cfg_.channels) ? T(0) : static_cast<T>(cfg_.gate_bias);
      }
    }
  }
  fill_normal(lay.in_w, 1.0 / std::sqrt(2.0 * c));
  fill_normal(lay.h1_w, std::sqrt(2.0 / c));
  fill_normal(lay.h2_w, 1.0 / std::sqrt(c));
}

template <typename T>
std::vector<WordOutput> Network<T>::infer(const std::vector<FeaturePair>& batch) const {
  const Layout lay = layout_of<T>(cfg_);
  TensorSet<T> stats = stats_;
  Ctx<T> ctx{cfg_, lay, params_, &stats, false, false, 1.0, 0.0, nullptr};
  std::vector<const FeaturePair*> ptrs;
  for (const auto& fp : batch) ptrs.push_back(&fp);
  std::vector<WordOutput> out;
  run<T>(ctx, ptrs, nullptr, nullptr, &out);
  return out;
}

template <typename T>
double Network<T>::train_pass(const std::vector<Example>& batch, std::int64_t step,
                              std::uint64_t dropout_seed, TensorSet<T>* grad, bool update_stats,
                              std::vector<WordOutput>* outputs) {
  const Layout lay = layout_of<T>(cfg_);
  const double ramp = cfg_.renorm_warmup > 0
                          ? std::min(1.0, static_cast<double>(step) / cfg_.renorm_warmup)
                          : 1.0;
  Rng rng(dropout_seed);
  Ctx<T> ctx{cfg_,
             lay,
             params_,
             &stats_,
             true,
             update_stats,
             1.0 + (cfg_.renorm_r_max - 1.0) * ramp,
             cfg_.renorm_d_max * ramp,
             &rng};
  std::vector<const FeaturePair*> ptrs;
  std::vector<const AccentVector*> golds;
  for (const auto& ex : batch) {
    ptrs.push_back(&ex.features);
    golds.push_back(&ex.gold);
  }
  return run(ctx, ptrs, &golds, grad, outputs);
}

template <typename T>
template <typename U>
Network<U> Network<T>::cast() const {
  Network<U> out(cfg_);
  for (std::size_t i = 0; i < params_.size(); ++i) {
    std::transform(params_[i].data.begin(), params_[i].data.end(), out.params_[i].data.begin(),
                   [](T v) { return static_cast<U>(v); });
  }
  for (std::size_t i = 0; i < stats_.size(); ++i) {
    std::transform(stats_[i].data.begin(), stats_[i].data.end(), out.stats_[i].data.begin(),
                   [](T v) { return static_cast<U>(v); });
  }
  return out;
}

template class Network<float>;
template class Network<double>;
template Network<double> Network<float>::cast<double>() const;
template Network<float> Network<double>::cast<float>() const;
template Network<float> Network<float>::cast<float>() const;

// ---------------------------------------------------------------------------
// Optimizer

TrainState::TrainState(ModelConfig cfg)
    : net(std::move(cfg)), m(net.params().zeros_like()), v(net.params().zeros_like()) {}

void adam_step(TrainState& state, const TensorSet<float>& grad, const AdamConfig& cfg) {
  auto& params = state.net.params();
  if (grad.size() != params.size()) throw std::invalid_argument("gradient layout mismatch");
  for (std::size_t i = 0; i < grad.size(); ++i) {
    if (grad[i].size() != params[i].size()) {
      throw std::invalid_argument("gradient shape mismatch for " + params[i].name);
    }
    for (float g : grad[i].data) {
      if (!std::isfinite(g)) throw std::runtime_error("non-finite gradient in " + grad[i].name);
    }
  }
  const std::int64_t t = state.step + 1;
  const double c1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(t));
  const double c2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(t));
  const float b1 = static_cast<float>(cfg.beta1), b2 = static_cast<float>(cfg.beta2);
  const float step_size = static_cast<float>(cfg.alpha / c1);
  const float inv_c2 = static_cast<float>(1.0 / c2);
  const float eps = static_cast<float>(cfg.eps);
  const float decay = static_cast<float>(cfg.decay);
  for (std::size_t i = 0; i < grad.size(); ++i) {
    float* w = params[i].data.data();
    float* m = state.m[i].data.data();
    float* v = state.v[i].data.data();
    const float* g = grad[i].data.data();
    for (std::size_t j = 0; j < grad[i].size(); ++j) {
      m[j] = b1 * m[j] + (1.0f - b1) * g[j];
      v[j] = b2 * v[j] + (1.0f - b2) * g[j] * g[j];
      w[j] -= step_size * m[j] / (std::sqrt(v[j] * inv_c2) + eps);
      const float sign = w[j] > 0.0f ? 1.0f : (w[j] < 0.0f ? -1.0f : 0.0f);
      w[j] -= decay * (w[j] + sign);
    }
  }
  state.step = t;
}

// ---------------------------------------------------------------------------
// Checkpoints

namespace {

constexpr char kMagic[5] = {'T', 'D', 'M', 'D', '1'};
constexpr std::uint8_t kVersion = 2;
constexpr std::uint8_t kFloat32 = 0;
constexpr std::uint8_t kFloat64 = 1;

// Raised while decoding; load_checkpoint adds the file name.
struct Corrupt {
  std::string what;
};

void put_u32(std::ostream& out, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

void put_f32(std::ostream& out, float f) {
  std::uint32_t bits;
  std::memcpy(&bits, &f, 4);
  put_u32(out, bits);
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) throw Corrupt{"truncated"};
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return v;
}

std::uint64_t get_u64(std::istream& in) {
  const std::uint64_t lo = get_u32(in);
  const std::uint64_t hi = get_u32(in);
  return lo | (hi << 32);
}

float get_f32(std::istream& in) {
  const std::uint32_t bits = get_u32(in);
  float f;
  std::memcpy(&f, &bits, 4);
  return f;
}

void put_header(std::ostream& out, const std::string& name, const std::vector<int>& shape,
                std::uint8_t dtype) {
  put_u32(out, static_cast<std::uint32_t>(name.size()));
  out.write(name.data(), static_cast<std::streamsize>(name.size()));
  put_u32(out, static_cast<std::uint32_t>(shape.size()));
  for (int d : shape) put_u32(out, static_cast<std::uint32_t>(d));
  out.put(static_cast<char>(dtype));
}

void put_section(std::ostream& out, const std::string& name, const std::vector<int>& shape,
                 const std::vector<float>& data) {
  put_header(out, name, shape, kFloat32);
  for (float f : data) put_f32(out, f);
}

void put_section(std::ostream& out, const std::string& name, const std::vector<int>& shape,
                 const std::vector<double>& data) {
  put_header(out, name, shape, kFloat64);
  for (double d : data) {
    std::uint64_t bits;
    std::memcpy(&bits, &d, 8);
    put_u64(out, bits);
  }
}

struct Section {
  std::string name;
  std::vector<int> shape;
  std::vector<float> data;    // float32 sections
  std::vector<double> wide;   // float64 sections
};

Section get_section(std::istream& in) {
  Section s;
  const std::uint32_t len = get_u32(in);
  if (len > 4096) throw Corrupt{"section name too long"};
  s.name.resize(len);
  if (!in.read(s.name.data(), len)) throw Corrupt{"truncated"};
  const std::uint32_t ndim = get_u32(in);
  if (ndim > 8) throw Corrupt{"too many dimensions in " + s.name};
  std::size_t n = 1;
  for (std::uint32_t i = 0; i < ndim; ++i) {
    s.shape.push_back(static_cast<int>(get_u32(in)));
    n *= static_cast<std::size_t>(s.shape.back());
  }
  if (n > (std::size_t{1} << 30)) throw Corrupt{"section too large"};
  const int dtype = in.get();
  if (dtype == kFloat32) {
    s.data.resize(n);
    for (auto& f : s.data) f = get_f32(in);
  } else if (dtype == kFloat64) {
    s.wide.resize(n);
    for (auto& d : s.wide) {
      const std::uint64_t bits = get_u64(in);
      std::memcpy(&d, &bits, 8);
    }
  } else {
    throw Corrupt{in ? "unknown value type in " + s.name : "truncated"};
  }
  return s;
}

std::vector<double> config_values(const ModelConfig& c) {
  std::vector<double> v = {static_cast<double>(c.channels), static_cast<double>(c.kernel),
                           static_cast<double>(c.dilations.size())};
  for (int d : c.dilations) v.push_back(static_cast<double>(d));
  for (double x : {c.dropout, c.target_gold, c.guide_width, c.guide_weight, c.renorm_momentum,
                   c.renorm_eps, static_cast<double>(c.renorm_warmup), c.renorm_r_max,
                   c.renorm_d_max, c.gate_bias}) {
    v.push_back(x);
  }
  return v;
}

ModelConfig config_from(const std::vector<double>& v) {
  if (v.size() < 3) throw Corrupt{"bad config section"};
  ModelConfig c;
  c.channels = static_cast<int>(v[0]);
  c.kernel = static_cast<int>(v[1]);
  const std::size_t nl = static_cast<std::size_t>(v[2]);
  if (v.size() != 3 + nl + 10) throw Corrupt{"bad config section"};
  c.dilations.clear();
  for (std::size_t i = 0; i < nl; ++i) c.dilations.push_back(static_cast<int>(v[3 + i]));
  const double* r = v.data() + 3 + nl;
  c.dropout = r[0];
  c.target_gold = r[1];
  c.guide_width = r[2];
  c.guide_weight = r[3];
  c.renorm_momentum = r[4];
  c.renorm_eps = r[5];
  c.renorm_warmup = static_cast<int>(r[6]);
  c.renorm_r_max = r[7];
  c.renorm_d_max = r[8];
  c.gate_bias = r[9];
  return c;
}

void restore(TensorSet<float>& set, const std::string& prefix, const std::vector<Section>& secs) {
  for (auto& t : set.tensors) {
    const std::string want = prefix + t.name;
    auto it = std::find_if(secs.begin(), secs.end(), [&](const Section& s) { return s.name == want; });
    if (it == secs.end()) throw Corrupt{"missing section " + want};
    if (it->shape != t.shape || it->data.size() != t.size()) {
      throw Corrupt{"shape mismatch in " + want};
    }
    t.data = it->data;
  }
}

}  // namespace

void save_checkpoint(const TrainState& state, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path.string() + ": cannot write file");
  out.write(kMagic, 5);
  out.put(static_cast<char>(kVersion));
  put_u64(out, static_cast<std::uint64_t>(state.step));
  const auto cfg = config_values(state.net.config());
  std::uint32_t count = 1 + static_cast<std::uint32_t>(3 * state.net.params().size() +
                                                       state.net.stats().size());
  put_u32(out, count);
  put_section(out, "config", {static_cast<int>(cfg.size())}, cfg);
  for (const auto& t : state.net.params().tensors) put_section(out, "param/" + t.name, t.shape, t.data);
  for (const auto& t : state.m.tensors) put_section(out, "adam_m/" + t.name, t.shape, t.data);
  for (const auto& t : state.v.tensors) put_section(out, "adam_v/" + t.name, t.shape, t.data);
  for (const auto& t : state.net.stats().tensors) put_section(out, "stats/" + t.name, t.shape, t.data);
  if (!out) throw IoError(path.string() + ": write failed");
}

TrainState load_checkpoint(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw IoError(path.string() + ": file not found");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string() + ": cannot open file");
  char magic[5];
  if (!in.read(magic, 5) || std::memcmp(magic, kMagic, 5) != 0) {
    throw FormatError(path.string(), 0, "not a checkpoint");
  }
  const int version = in.get();
  if (version != kVersion) throw FormatError(path.string(), 0, "unsupported checkpoint version");
  std::uint64_t step = 0;
  std::uint32_t count = 0;
  try {
    step = get_u64(in);
    count = get_u32(in);
  } catch (const Corrupt& c) {
    throw FormatError(path.string(), 0, c.what);
  }
  try {
    std::vector<Section> secs;
    for (std::uint32_t i = 0; i < count; ++i) secs.push_back(get_section(in));
    if (secs.empty() || secs[0].name != "config") throw Corrupt{"missing config"};
    TrainState state(config_from(secs[0].wide));
    state.step = static_cast<std::int64_t>(step);
    restore(state.net.params(), "param/", secs);
    restore(state.m, "adam_m/", secs);
    restore(state.v, "adam_v/", secs);
    restore(state.net.stats(), "stats/", secs);
    return state;
  } catch (const Corrupt& c) {
    throw FormatError(path.string(), 0, c.what);
  }
}

// ---------------------------------------------------------------------------
// Inference

AccentVector decode(const WordOutput& out) {
  AccentVector raw;
  raw.reserve(out.logits.size());
  for (const auto& row : out.logits) {
    const auto it = std::max_element(row.begin(), row.end());
    raw.push_back(kLabelOrder[static_cast<std::size_t>(it - row.begin())]);
  }
  return repair_accent(raw);
}

AccentVector predict(const Network<float>& net, std::string_view surface, const MoraSeq& yomi,
                     const Lexicon& lex, const SelectionConfig& sel) {
  if (yomi.empty()) throw std::invalid_argument("empty yomi");
  Rng unused(0);
  const Segmentation seg = select_candidates(surface, yomi, lex, sel, Mode::kInfer, unused);
  const auto out = net.infer({featurize(seg, yomi)});
  return decode(out.at(0));
}

}  // namespace pitchdict
