from dotenv import load_dotenv

load_dotenv()

from contextlib import asynccontextmanager
import logging
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from fs_lab import __version__
from fs_lab.config import get_settings
from fs_lab.routers import bounds, extremals

settings = get_settings()

logging.basicConfig(level=settings.logging_level("INFO"))
logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    logger.info(
        f"fs_lab {__version__} starting (order={settings.order}, "
        f"workers={settings.worker_count()}, prefix={settings.api_prefix})"
    )

    yield

    logger.info("fs_lab shutting down")


app = FastAPI(title="fs_lab", version=__version__, lifespan=lifespan)

app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.cors_origins,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

API_PREFIX = settings.api_prefix
app.include_router(bounds.router, prefix=API_PREFIX)
app.include_router(extremals.router, prefix=API_PREFIX)


@app.get("/")
def read_root():
    return {"status": "ok", "message": "fs_lab is running"}


@app.get(f"{API_PREFIX}")
def api_root():
    return {"status": "ok", "message": "fs_lab API is running"}
