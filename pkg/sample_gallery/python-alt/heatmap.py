import altair as alt
from vega_datasets import data

cars = data.cars()

chart = alt.Chart(cars).mark_rect().encode(
    x="cylinders:O",
    y="origin:N",
    color="count()",
)
chart = chart.properties(title="Car counts by cylinders and origin")
chart.save("chart.html")
