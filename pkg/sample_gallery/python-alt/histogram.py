import altair as alt
from vega_datasets import data

cars = data.cars()

chart = alt.Chart(cars).mark_bar().encode(
    x=alt.X("mpg:Q", bin=True),
    y="count()",
)
chart.save("chart.html")
