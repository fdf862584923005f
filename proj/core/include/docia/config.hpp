#pragma once

#include <optional>
#include <set>
#include <string>

namespace docia {

enum class Mode { AsrSmt, AsrDmt, Docia };

enum class Stage { AsrRefine, ContextMt, MtRefine };

enum class Ablation { NoGate, NoShortCtx, NoLongCtx };

enum class ContextMode { Online, Offline };

enum class BackendKind { Http, Scripted };

std::string to_string(Mode m);
std::string to_string(Stage s);
std::string to_string(Ablation a);
std::string to_string(ContextMode m);

Mode mode_from_string(const std::string& s);
Stage stage_from_string(const std::string& s);
Ablation ablation_from_string(const std::string& s);
ContextMode context_mode_from_string(const std::string& s);

struct BackendConfig {
    BackendKind kind = BackendKind::Http;
    std::string endpoint_url = "https://api.openai.com/v1";
    std::string model_name = "gpt-4o-mini";
    std::string credentials_env_var = "DOCIA_API_KEY";
    double timeout_s = 60.0;
    int max_retries = 3;
    double backoff_initial_s = 0.5;
    double backoff_multiplier = 2.0;
    double temperature = 0.0;
    int max_output_tokens = 1024;
    int concurrency_limit = 4;
};

// Default-constructed == paper defaults: docia mode, all three enhancement
// stages, online context, L=6 with m=n=3, lambda=0.7.
struct PipelineConfig {
    Mode mode = Mode::Docia;
    std::set<Stage> stages = {Stage::AsrRefine, Stage::ContextMt, Stage::MtRefine};
    ContextMode context_mode = ContextMode::Online;
    int window = 6; // L
    int short_ctx = 3; // m
    int long_ctx = 3; // n
    double lambda = 0.7;
    std::optional<double> lambda_mt; // translation-gate override
    std::set<Ablation> ablations;
    std::string source_lang = "en";
    std::string target_lang = "de";
    std::string similarity = "indel"; // or "levenshtein"
    BackendConfig backend;
    int parallel_documents = 1;

    double mt_threshold() const { return lambda_mt.value_or(lambda); }
    bool has_stage(Stage s) const { return stages.count(s) != 0; }
    bool has_ablation(Ablation a) const { return ablations.count(a) != 0; }
};

// Checks consistency and returns the config unchanged on success.
// Rejects m+n != L (unless an ablation overrides the split), lambda outside
// [0,1], negative window parts, and contradictory mode/stage combinations.
PipelineConfig validate_config(const PipelineConfig& raw);

// Overlays keys present in the JSON text onto defaults, then validates.
// Absent "stages" defaults to all three for docia mode and none otherwise.
PipelineConfig parse_config_json(const std::string& json_text);

// Effective-config echo used by run manifests and config digests.
std::string config_to_json(const PipelineConfig& cfg);

} // namespace docia
