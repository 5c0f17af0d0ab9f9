"""RIS-assisted 3D connectivity simulator for UAV links (Python bindings)."""

from ._core import (  # noqa: F401
    ConfigError,
    DegenerateGeometry,
    Environment,
    ExactRates,
    InvalidParameter,
    LinkGeometry,
    LinkReport,
    Position3D,
    RunConfig,
    Scenario,
    __version__,
    building_count,
    empirical_cdf,
    environment,
    environments,
    evaluate_link,
    exact_link_rates,
    free_space_path_loss,
    link_geometry,
    los_probability,
    parse_config,
    rate_case1,
    rate_case2,
    rate_case3,
    run,
    run_cdf,
    run_heatmap,
    serialize_config,
    ula_response,
    upa_response,
    wavelength_of,
)
