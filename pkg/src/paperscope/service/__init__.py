from .app import create_app, create_app_from_config
from .config import ApiConfig, load_config
from .state import ActiveBundle, ServiceState, build_bundle

__all__ = [
    "ActiveBundle",
    "ApiConfig",
    "ServiceState",
    "build_bundle",
    "create_app",
    "create_app_from_config",
    "load_config",
]
