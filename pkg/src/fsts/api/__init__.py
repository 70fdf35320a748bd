"""Service layer: pydantic request/response models, handlers, FastAPI app."""
