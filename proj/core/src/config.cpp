#include "docia/config.hpp"

#include "docia/errors.hpp"

#include <json.hpp>

namespace docia {

using json = nlohmann::ordered_json;

std::string to_string(Mode m) {
    switch (m) {
    case Mode::AsrSmt: return "asr-smt";
    case Mode::AsrDmt: return "asr-dmt";
    case Mode::Docia: return "docia";
    }
    return "docia";
}

std::string to_string(Stage s) {
    switch (s) {
    case Stage::AsrRefine: return "asr_refine";
    case Stage::ContextMt: return "context_mt";
    case Stage::MtRefine: return "mt_refine";
    }
    return "asr_refine";
}

std::string to_string(Ablation a) {
    switch (a) {
    case Ablation::NoGate: return "no_gate";
    case Ablation::NoShortCtx: return "no_short_ctx";
    case Ablation::NoLongCtx: return "no_long_ctx";
    }
    return "no_gate";
}

std::string to_string(ContextMode m) {
    return m == ContextMode::Online ? "online" : "offline";
}

Mode mode_from_string(const std::string& s) {
    if (s == "asr-smt") return Mode::AsrSmt;
    if (s == "asr-dmt") return Mode::AsrDmt;
    if (s == "docia") return Mode::Docia;
    throw ConfigError("unknown mode: " + s);
}

Stage stage_from_string(const std::string& s) {
    if (s == "asr_refine" || s == "a") return Stage::AsrRefine;
    if (s == "context_mt" || s == "m") return Stage::ContextMt;
    if (s == "mt_refine" || s == "p") return Stage::MtRefine;
    throw ConfigError("unknown stage: " + s);
}

Ablation ablation_from_string(const std::string& s) {
    if (s == "no_gate") return Ablation::NoGate;
    if (s == "no_short_ctx") return Ablation::NoShortCtx;
    if (s == "no_long_ctx") return Ablation::NoLongCtx;
    throw ConfigError("unknown ablation: " + s);
}

ContextMode context_mode_from_string(const std::string& s) {
    if (s == "online") return ContextMode::Online;
    if (s == "offline") return ContextMode::Offline;
    throw ConfigError("unknown context_mode: " + s);
}

PipelineConfig validate_config(const PipelineConfig& raw) {
    const PipelineConfig& c = raw;
    if (c.short_ctx < 0) throw ConfigError("m must be >= 0");
    if (c.long_ctx < 0) throw ConfigError("n must be >= 0");
    if (c.window < 0) throw ConfigError("L must be >= 0");
    const bool split_overridden =
        c.has_ablation(Ablation::NoShortCtx) || c.has_ablation(Ablation::NoLongCtx);
    if (!split_overridden && c.short_ctx + c.long_ctx != c.window) {
        throw ConfigError("m + n must equal L (got " + std::to_string(c.short_ctx) +
                          " + " + std::to_string(c.long_ctx) + " != " +
                          std::to_string(c.window) + ")");
    }
    if (c.lambda < 0.0 || c.lambda > 1.0) throw ConfigError("lambda must be in [0,1]");
    if (c.lambda_mt && (*c.lambda_mt < 0.0 || *c.lambda_mt > 1.0)) {
        throw ConfigError("lambda_mt must be in [0,1]");
    }
    if (c.mode != Mode::Docia && !c.stages.empty()) {
        throw ConfigError("mode " + to_string(c.mode) + " takes no stages");
    }
    if (c.similarity != "indel" && c.similarity != "levenshtein") {
        throw ConfigError("similarity must be 'indel' or 'levenshtein'");
    }
    if (c.parallel_documents < 1) throw ConfigError("parallel_documents must be >= 1");
    if (c.backend.timeout_s <= 0) throw ConfigError("backend.timeout must be > 0");
    if (c.backend.max_retries < 0) throw ConfigError("backend.max_retries must be >= 0");
    if (c.backend.concurrency_limit < 1) {
        throw ConfigError("backend.concurrency_limit must be >= 1");
    }
    return c;
}

namespace {

BackendConfig backend_from_json(const json& j, BackendConfig base) {
    if (j.contains("kind")) {
        const auto k = j.at("kind").get<std::string>();
        if (k == "http") base.kind = BackendKind::Http;
        else if (k == "scripted") base.kind = BackendKind::Scripted;
        else throw ConfigError("unknown backend kind: " + k);
    }
    if (j.contains("endpoint_url")) base.endpoint_url = j.at("endpoint_url").get<std::string>();
    if (j.contains("model_name")) base.model_name = j.at("model_name").get<std::string>();
    if (j.contains("credentials_env_var")) {
        base.credentials_env_var = j.at("credentials_env_var").get<std::string>();
    }
    if (j.contains("timeout_s")) base.timeout_s = j.at("timeout_s").get<double>();
    if (j.contains("max_retries")) base.max_retries = j.at("max_retries").get<int>();
    if (j.contains("backoff_initial_s")) base.backoff_initial_s = j.at("backoff_initial_s").get<double>();
    if (j.contains("backoff_multiplier")) base.backoff_multiplier = j.at("backoff_multiplier").get<double>();
    if (j.contains("temperature")) base.temperature = j.at("temperature").get<double>();
    if (j.contains("max_output_tokens")) base.max_output_tokens = j.at("max_output_tokens").get<int>();
    if (j.contains("concurrency_limit")) base.concurrency_limit = j.at("concurrency_limit").get<int>();
    return base;
}

} // namespace

PipelineConfig parse_config_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");

    PipelineConfig cfg;
    try {
        if (j.contains("mode")) cfg.mode = mode_from_string(j.at("mode").get<std::string>());
        if (j.contains("stages")) {
            cfg.stages.clear();
            for (const auto& s : j.at("stages")) {
                cfg.stages.insert(stage_from_string(s.get<std::string>()));
            }
        } else if (cfg.mode != Mode::Docia) {
            cfg.stages.clear();
        }
        if (j.contains("context_mode")) {
            cfg.context_mode = context_mode_from_string(j.at("context_mode").get<std::string>());
        }
        if (j.contains("L")) cfg.window = j.at("L").get<int>();
        if (j.contains("m")) cfg.short_ctx = j.at("m").get<int>();
        if (j.contains("n")) cfg.long_ctx = j.at("n").get<int>();
        // A bare L without m/n keeps an even split when possible.
        if (j.contains("L") && !j.contains("m") && !j.contains("n")) {
            cfg.short_ctx = cfg.window / 2;
            cfg.long_ctx = cfg.window - cfg.short_ctx;
        }
        if (j.contains("lambda")) cfg.lambda = j.at("lambda").get<double>();
        if (j.contains("lambda_mt") && !j.at("lambda_mt").is_null()) {
            cfg.lambda_mt = j.at("lambda_mt").get<double>();
        }
        if (j.contains("ablations")) {
            for (const auto& a : j.at("ablations")) {
                cfg.ablations.insert(ablation_from_string(a.get<std::string>()));
            }
        }
        if (j.contains("source_lang")) cfg.source_lang = j.at("source_lang").get<std::string>();
        if (j.contains("target_lang")) cfg.target_lang = j.at("target_lang").get<std::string>();
        if (j.contains("similarity")) cfg.similarity = j.at("similarity").get<std::string>();
        if (j.contains("parallel_documents")) {
            cfg.parallel_documents = j.at("parallel_documents").get<int>();
        }
        if (j.contains("backend")) cfg.backend = backend_from_json(j.at("backend"), cfg.backend);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    }
    return validate_config(cfg);
}

std::string config_to_json(const PipelineConfig& cfg) {
    json j;
    j["mode"] = to_string(cfg.mode);
    json stages = json::array();
    for (Stage s : cfg.stages) stages.push_back(to_string(s));
    j["stages"] = stages;
    j["context_mode"] = to_string(cfg.context_mode);
    j["L"] = cfg.window;
    j["m"] = cfg.short_ctx;
    j["n"] = cfg.long_ctx;
    j["lambda"] = cfg.lambda;
    if (cfg.lambda_mt) j["lambda_mt"] = *cfg.lambda_mt;
    json ablations = json::array();
    for (Ablation a : cfg.ablations) ablations.push_back(to_string(a));
    j["ablations"] = ablations;
    j["source_lang"] = cfg.source_lang;
    j["target_lang"] = cfg.target_lang;
    j["similarity"] = cfg.similarity;
    j["parallel_documents"] = cfg.parallel_documents;
    json b;
    b["kind"] = cfg.backend.kind == BackendKind::Http ? "http" : "scripted";
    b["endpoint_url"] = cfg.backend.endpoint_url;
    b["model_name"] = cfg.backend.model_name;
    b["credentials_env_var"] = cfg.backend.credentials_env_var;
    b["timeout_s"] = cfg.backend.timeout_s;
    b["max_retries"] = cfg.backend.max_retries;
    b["backoff_initial_s"] = cfg.backend.backoff_initial_s;
    b["backoff_multiplier"] = cfg.backend.backoff_multiplier;
    b["temperature"] = cfg.backend.temperature;
    b["max_output_tokens"] = cfg.backend.max_output_tokens;
    b["concurrency_limit"] = cfg.backend.concurrency_limit;
    j["backend"] = b;
    return j.dump(2);
}

} // namespace docia
