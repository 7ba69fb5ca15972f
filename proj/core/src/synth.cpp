#include "convgraph/synth.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "convgraph/rng.hpp"
#include "convgraph/sentiment.hpp"

namespace convgraph {

void SynthConfig::validate() const {
  if (n_abusive + n_non_abusive < 1) {
    throw std::invalid_argument("corpus must contain at least one conversation");
  }
  for (double p : {negative_interaction_prob, insult_token_rate, background_negative_rate,
                   subtle_fraction}) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("probabilities must lie in [0, 1]");
  }
  if (mean_conversation_length < 12.0) {
    throw std::invalid_argument("mean_conversation_length must be >= 12");
  }
  if (fan_in_multiplier < 0.0) throw std::invalid_argument("fan_in_multiplier must be >= 0");
}

namespace {

constexpr std::size_t kAuthorUniverse = 20000;
constexpr std::size_t kRecencyWindow = 6;
constexpr double kRecencyProb = 0.35;
constexpr std::size_t kBurstHalfWidth = 35;
constexpr double kReplyProb = 0.60;
constexpr double kBenignBurstProb = 0.40;

struct ConversationPlan {
  bool abusive = false;
  bool subtle = false;
};

class Generator {
 public:
  Generator(const SynthConfig& cfg, Rng& rng) : cfg_(cfg), rng_(rng) {}

  Conversation make(const std::string& id, const ConversationPlan& plan) {
    Conversation conv;
    conv.id = id;
    conv.label = plan.abusive ? ClassLabel::Abusive : ClassLabel::NonAbusive;

    const std::size_t length = sample_length();
    const std::size_t pool_size = sample_pool_size();
    std::vector<std::string> pool = sample_pool(pool_size);
    std::vector<double> activity = activity_weights(pool_size);

    const std::size_t flag_pos =
        length / 4 + rng_.uniform(std::max<std::size_t>(1, length / 2));

    // Abuser: a mid-activity pool member, boosted below.
    const std::size_t abuser = pool_size / 4 + rng_.uniform(std::max<std::size_t>(1, pool_size / 4));
    const double abuser_share = std::min(0.5, 0.05 * cfg_.fan_in_multiplier);
    const std::size_t burst_half = plan.subtle ? kBurstHalfWidth * 3 / 2 : kBurstHalfWidth;
    const std::size_t burst_begin = flag_pos > burst_half ? flag_pos - burst_half : 0;
    const std::size_t burst_end = std::min(length - 1, flag_pos + burst_half);

    // Benign pair burst: two friendly users chatting rapidly; gives
    // non-abusive graphs heavy edges too, so weight alone is not a class.
    bool benign_burst = !plan.abusive && rng_.bernoulli(kBenignBurstProb);
    std::size_t benign_center = 0, benign_a = 0, benign_b = 0;
    if (benign_burst && pool_size >= 2) {
      benign_center = rng_.uniform(length);
      benign_a = rng_.uniform(pool_size);
      do {
        benign_b = rng_.uniform(pool_size);
      } while (benign_b == benign_a);
    }

    std::deque<std::size_t> recent;
    std::size_t prev_author = pool_size;  // sentinel

    conv.messages.reserve(length);
    for (std::size_t p = 0; p < length; ++p) {
      const bool in_burst = plan.abusive && p >= burst_begin && p <= burst_end;
      const bool in_benign =
          benign_burst && p + 10 >= benign_center && p <= benign_center + 10;

      std::size_t author;
      bool is_reply_to_abuser = false;
      if (plan.abusive && p == flag_pos) {
        author = abuser;
      } else if (in_burst && prev_author == abuser && rng_.bernoulli(kReplyProb)) {
        author = draw_author(activity, recent);
        if (author == abuser) author = (abuser + 1) % pool_size;
        is_reply_to_abuser = true;
      } else if (in_burst && rng_.bernoulli(abuser_share)) {
        author = abuser;
      } else if (in_benign && pool_size >= 2) {
        author = (p % 2 == 0) ? benign_a : benign_b;
      } else {
        author = draw_author(activity, recent);
      }

      Message msg;
      msg.author = pool[author];
      msg.position = static_cast<std::int64_t>(p);
      msg.flagged = (p == flag_pos);

      const bool abuser_in_burst = in_burst && author == abuser;
      msg.text = make_text(plan, abuser_in_burst, is_reply_to_abuser, in_burst, in_benign,
                           msg.flagged);
      conv.messages.push_back(std::move(msg));

      recent.push_back(author);
      if (recent.size() > kRecencyWindow) recent.pop_front();
      prev_author = author;
    }
    conv.target_index = flag_pos;
    return conv;
  }

 private:
  std::size_t sample_length() const {
    const double raw = rng_.gaussian(cfg_.mean_conversation_length,
                                     0.22 * cfg_.mean_conversation_length);
    return static_cast<std::size_t>(std::clamp(raw, 12.0, 2400.0));
  }

  std::size_t sample_pool_size() const {
    const double raw = rng_.gaussian(50.0, 15.0);
    return static_cast<std::size_t>(std::clamp(raw, 4.0, 120.0));
  }

  std::vector<std::string> sample_pool(std::size_t n) const {
    std::vector<std::string> pool;
    pool.reserve(n);
    std::unordered_set<std::string> seen;
    while (pool.size() < n) {
      std::string author = "u" + std::to_string(rng_.uniform(kAuthorUniverse));
      if (seen.insert(author).second) pool.push_back(std::move(author));
    }
    return pool;
  }

  // Zipf-like activity so every conversation has chatty users and lurkers.
  static std::vector<double> activity_weights(std::size_t n) {
    std::vector<double> w(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = 1.0 / std::pow(static_cast<double>(i + 1), 0.8);
      total += w[i];
    }
    for (double& x : w) x /= total;
    return w;
  }

  std::size_t draw_author(const std::vector<double>& activity,
                          const std::deque<std::size_t>& recent) const {
    if (!recent.empty() && rng_.bernoulli(kRecencyProb)) {
      return recent[rng_.uniform(recent.size())];
    }
    double u = rng_.uniform_real();
    for (std::size_t i = 0; i < activity.size(); ++i) {
      u -= activity[i];
      if (u <= 0.0) return i;
    }
    return activity.size() - 1;
  }

  std::string make_text(const ConversationPlan& plan, bool abuser_in_burst,
                        bool reply_to_abuser, bool in_burst, bool in_benign,
                        bool flagged) const {
    const auto& neutral = builtin_neutral_tokens();
    const auto& positive = builtin_positive_tokens();
    const auto& negative = builtin_negative_tokens();

    std::vector<std::string> tokens;
    const std::size_t body = 4 + rng_.poisson(8.0);
    for (std::size_t i = 0; i < body; ++i) {
      tokens.push_back(neutral[rng_.uniform(neutral.size())]);
    }

    const bool suppress_hostility = plan.subtle && in_burst;
    if (plan.abusive && !plan.subtle) {
      if (flagged || (abuser_in_burst && rng_.bernoulli(cfg_.insult_token_rate))) {
        const std::size_t k = 2 + rng_.uniform(2);
        for (std::size_t i = 0; i < k; ++i) {
          tokens.push_back(negative[rng_.uniform(negative.size())]);
        }
      } else if (reply_to_abuser && rng_.bernoulli(cfg_.negative_interaction_prob)) {
        const std::size_t k = 1 + rng_.uniform(2);
        for (std::size_t i = 0; i < k; ++i) {
          tokens.push_back(negative[rng_.uniform(negative.size())]);
        }
      }
    }

    if (!suppress_hostility && rng_.bernoulli(cfg_.background_negative_rate)) {
      tokens.push_back(negative[rng_.uniform(negative.size())]);
    }
    if (rng_.bernoulli(in_benign ? 0.30 : 0.10)) {
      tokens.push_back(positive[rng_.uniform(positive.size())]);
    }

    std::string text;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i) text.push_back(' ');
      text += tokens[i];
    }
    return text;
  }

  const SynthConfig& cfg_;
  Rng& rng_;
};

}  // namespace

std::vector<Conversation> generate_synthetic_corpus(const SynthConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);

  std::vector<ConversationPlan> plans;
  plans.reserve(cfg.n_abusive + cfg.n_non_abusive);
  for (std::size_t i = 0; i < cfg.n_abusive; ++i) {
    ConversationPlan plan;
    plan.abusive = true;
    plans.push_back(plan);
  }
  for (std::size_t i = 0; i < cfg.n_non_abusive; ++i) plans.push_back(ConversationPlan{});
  rng.shuffle(plans);
  for (auto& plan : plans) {
    if (plan.abusive) plan.subtle = rng.bernoulli(cfg.subtle_fraction);
  }

  Generator gen(cfg, rng);
  std::vector<Conversation> corpus;
  corpus.reserve(plans.size());
  const int width = static_cast<int>(std::to_string(plans.size()).size());
  for (std::size_t i = 0; i < plans.size(); ++i) {
    std::string index = std::to_string(i);
    if (static_cast<int>(index.size()) < width) {
      index.insert(0, static_cast<std::size_t>(width) - index.size(), '0');
    }
    corpus.push_back(gen.make("c" + index, plans[i]));
  }
  return corpus;
}

}  // namespace convgraph
