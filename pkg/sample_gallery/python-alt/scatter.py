import altair as alt
from vega_datasets import data

cars = data.cars()

chart = alt.Chart(cars).mark_point().encode(
    x="horsepower:Q",
    y="mpg:Q",
)
chart.save("chart.html")
