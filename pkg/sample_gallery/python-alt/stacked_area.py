import altair as alt
from vega_datasets import data

cars = data.cars()

chart = alt.Chart(cars).mark_area().encode(
    x="year:T",
    y="count()",
    color="origin:N",
)
chart = chart.properties(title="Car counts over time by origin")
chart.save("chart.html")
