import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _int_list(value):
    return tuple(int(part) for part in value.split(',') if part.strip())


def _float_list(value):
    return tuple(float(part) for part in value.split(',') if part.strip())


class Config:
    """Base configuration class"""
    # Logging Configuration
    LOG_LEVEL = os.getenv('TREEINV_LOG_LEVEL', 'WARNING')
    LOG_FORMAT = os.getenv('TREEINV_LOG_FORMAT', '%(asctime)s %(levelname)s %(name)s: %(message)s')

    # Numeric Representation
    DEFAULT_SCALE = int(os.getenv('TREEINV_DEFAULT_SCALE', '1'))

    # Oracle Configuration
    ORACLE_BUDGET = int(os.getenv('TREEINV_ORACLE_BUDGET', '10000000'))

    # Instance Generator Configuration (infeasible / zero-cost / interior)
    GENERATOR_REGIME_WEIGHTS = _float_list(os.getenv('TREEINV_GENERATOR_REGIME_WEIGHTS', '0.1,0.1,0.8'))

    # Verification Configuration
    VERIFY_COUNT = int(os.getenv('TREEINV_VERIFY_COUNT', '500'))
    VERIFY_MAX_N = int(os.getenv('TREEINV_VERIFY_MAX_N', '8'))
    VERIFY_SEED = int(os.getenv('TREEINV_VERIFY_SEED', '99'))

    # Benchmark Configuration
    BENCH_SIZES = _int_list(os.getenv('TREEINV_BENCH_SIZES', '1000,3000,5000'))
    BENCH_TRIALS = int(os.getenv('TREEINV_BENCH_TRIALS', '5'))
    BENCH_SEED = int(os.getenv('TREEINV_BENCH_SEED', '2024'))

    # Output Configuration
    OUTPUT_DIR = os.getenv('TREEINV_OUTPUT_DIR')

class DevelopmentConfig(Config):
    """Development configuration"""
    LOG_LEVEL = os.getenv('TREEINV_LOG_LEVEL', 'DEBUG')

class ProductionConfig(Config):
    """Production configuration"""
    LOG_LEVEL = os.getenv('TREEINV_LOG_LEVEL', 'WARNING')

class TestingConfig(Config):
    """Testing configuration"""
    TESTING = True
    ORACLE_BUDGET = 1000000
    BENCH_TRIALS = 2

# Configuration mapping
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': ProductionConfig
}


def get_config(config_name=None):
    """Configuration class selected by name or by TREEINV_ENV"""
    if config_name is None:
        config_name = os.getenv('TREEINV_ENV', 'default')
    return config[config_name]
