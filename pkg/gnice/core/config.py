from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="GNICE_",
        env_file=".env",
        env_ignore_empty=True,
        extra="ignore",
    )
    MAX_PAIRS: int = 1_000_000
    MAX_DEGREE: int = 60
    MAX_ITERATIONS: int = 100
    # Caps used when a command is run with --slow.
    SLOW_MAX_PAIRS: int = 10_000_000
    SLOW_MAX_DEGREE: int = 200
    MAX_SWEEP_VARIABLES: int = 6
    DEFAULT_ORDER: str = "degrevlex"
    DEFAULT_PRIME: int = 32003
    CHECK_INVARIANTS: bool = True


settings = Settings()
