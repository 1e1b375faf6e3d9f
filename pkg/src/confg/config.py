from pydantic import BaseSettings


class Settings(BaseSettings):
    max_poset_size: int = 16
    admit_empty_ideal: bool = True
    canonicity_max_points: int = 12
    fuzz_seed: int = 1
    fuzz_count: int = 100
    fuzz_max_size: int = 6
    workers: int = 1
    log_level: str = 'WARNING'
    report_timing: bool = False
    report_format: str = 'text'

    class Config:
        env_prefix = "MDS_"
        env_file = "./.env"
        env_file_encoding = "utf-8"


settings = Settings()
