"""hedgecast: multimodal uncertainty communication for temperature forecasts.

Turns a trial of 100 temperature samples into synchronized hedged text,
SSML speech markup, a timing manifest, and uncertainty-chart specs, bundled
as one JSON payload for the web interface.
"""

from .bundle import ForecastBundle, build_bundle, bundle_to_dict, bundle_to_json
from .errors import (
    DegenerateDistributionError,
    FormatError,
    OutOfDomainError,
    ParameterError,
    TrialNotFoundError,
)
from .interaction import (
    CumulativePayload,
    HedgeEffect,
    IconArrayPayload,
    cumulative_payload,
    hedge_effect,
    occurrence_payload,
)
from .speech import (
    SsmlDocument,
    TimingManifest,
    estimate_timings,
    merge_tts_marks,
    to_ssml,
)
from .stats import SummaryStats, ecdf, quantile, skew_label, skewness, summary_stats
from .textgen import (
    AnnotatedText,
    Sentence,
    Span,
    TemplateConfig,
    format_temperature,
    load_templates,
    render_text,
)
from .trials import (
    TrialDataset,
    TrialSet,
    generate_trials,
    parse_csv,
    select_trial,
    write_csv,
)
from .validate import validate_bundle
from .vizspec import (
    AxisDomain,
    DensitySpec,
    DotPlotSpec,
    axis_domain,
    highlight_region,
    kde_density,
    quantile_dotplot,
)

__version__ = "0.1.0"
